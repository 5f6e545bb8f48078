#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spinrep/characters.hpp"
#include "spinrep/maps.hpp"
#include "spinrep/partition.hpp"
#include "spinrep/stanley.hpp"
#include "spinrep/verify.hpp"

using namespace spinrep;
using nlohmann::json;

namespace {

enum class Format { Plain, Json, Csv };

std::string csvField(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

void csvRow(std::ostream& os, const std::vector<std::string>& fields)
{
    for (std::size_t i = 0; i < fields.size(); ++i)
        os << (i ? "," : "") << csvField(fields[i]);
    os << '\n';
}

// A single named value, e.g. a character.
void emitValue(Format f, const std::vector<std::pair<std::string, std::string>>& inputs, const std::string& value)
{
    if (f == Format::Plain) {
        std::cout << value << '\n';
    } else if (f == Format::Json) {
        json j = json::object();
        for (const auto& [k, v] : inputs)
            j[k] = v;
        j["value"] = value;
        std::cout << j.dump() << '\n';
    } else {
        std::vector<std::string> head, row;
        for (const auto& [k, v] : inputs) {
            head.push_back(k);
            row.push_back(v);
        }
        head.push_back("value");
        row.push_back(value);
        csvRow(std::cout, head);
        csvRow(std::cout, row);
    }
}

int emitReports(Format f, const std::vector<VerificationReport>& reports)
{
    bool ok = true;
    for (const auto& r : reports)
        ok = ok && r.passed();
    if (f == Format::Json) {
        if (reports.size() == 1) {
            std::cout << toJson(reports.front()).dump(2) << '\n';
        } else {
            json all = json::array();
            for (const auto& r : reports)
                all.push_back(toJson(r));
            std::cout << all.dump(2) << '\n';
        }
    } else if (f == Format::Csv) {
        csvRow(std::cout, {"identity", "cases", "failures", "ms"});
        for (const auto& r : reports)
            csvRow(std::cout, {r.identity, std::to_string(r.cases), std::to_string(r.failures.size()),
                               std::to_string(static_cast<long>(r.ms))});
    } else {
        for (const auto& r : reports) {
            std::cout << (r.passed() ? "PASS " : "FAIL ") << r.identity << " cases=" << r.cases
                      << " failures=" << r.failures.size() << '\n';
            for (std::size_t i = 0; i < r.failures.size() && i < 5; ++i)
                std::cout << "  " << r.failures[i].inputs.dump() << ": " << r.failures[i].lhs
                          << " != " << r.failures[i].rhs << '\n';
        }
    }
    return ok ? 0 : 1;
}

void emitTable(Format f, const CharacterTable& t)
{
    if (f == Format::Json) {
        std::cout << toJson(t).dump() << '\n';
        return;
    }
    std::vector<std::string> head{t.spin ? "xi\\pi" : "lambda\\pi"};
    for (const auto& c : t.cols)
        head.push_back(toString(c));
    if (f == Format::Csv) {
        csvRow(std::cout, head);
        for (std::size_t r = 0; r < t.rows.size(); ++r) {
            std::vector<std::string> row{toString(t.rows[r])};
            for (const auto& v : t.values[r])
                row.push_back(toString(v));
            csvRow(std::cout, row);
        }
        return;
    }
    for (std::size_t i = 0; i < head.size(); ++i)
        std::cout << (i ? " " : "") << head[i];
    std::cout << '\n';
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        std::cout << toString(t.rows[r]);
        for (const auto& v : t.values[r])
            std::cout << ' ' << toString(v);
        std::cout << '\n';
    }
}

void emitPolynomial(Format f, const StanleyPoly& poly, const json& inputs, int l)
{
    const auto names = stanleyVariableNames(l);
    if (f == Format::Plain) {
        std::cout << poly.toString(names) << '\n';
        return;
    }
    if (f == Format::Json) {
        json terms = json::array();
        for (const auto& [e, c] : poly.terms())
            terms.push_back({{"exponents", e}, {"coeff", toString(c)}});
        json j = inputs;
        j["variables"] = names;
        j["terms"] = terms;
        std::cout << j.dump() << '\n';
        return;
    }
    std::vector<std::string> head = names;
    head.push_back("coeff");
    csvRow(std::cout, head);
    for (const auto& [e, c] : poly.terms()) {
        std::vector<std::string> row;
        for (int x : e)
            row.push_back(std::to_string(x));
        row.push_back(toString(c));
        csvRow(std::cout, row);
    }
}

void emitCensus(Format f, const json& rows)
{
    if (f == Format::Json) {
        std::cout << rows.dump() << '\n';
        return;
    }
    auto euler = [](const json& r) {
        std::string s;
        for (const auto& e : r["euler_per_component"])
            s += (s.empty() ? "" : ";") + std::to_string(e.get<int>());
        return s;
    };
    if (f == Format::Csv) {
        csvRow(std::cout, {"matching_id", "components", "white_vertices", "orientable", "euler_per_component"});
        for (const auto& r : rows)
            csvRow(std::cout, {std::to_string(r["matching_id"].get<long>()), std::to_string(r["components"].get<int>()),
                               std::to_string(r["white_vertices"].get<int>()),
                               r["orientable"].get<bool>() ? "true" : "false", euler(r)});
        return;
    }
    for (const auto& r : rows)
        std::cout << r["matching_id"].get<long>() << " components=" << r["components"].get<int>()
                  << " white=" << r["white_vertices"].get<int>()
                  << (r["orientable"].get<bool>() ? " orientable" : " non-orientable") << " euler=" << euler(r)
                  << '\n';
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact linear and spin characters of the symmetric groups"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "plain";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"plain", "json", "csv"}))
        ->capture_default_str();

    std::string lambdaArg, piArg, xiArg, mode = "linear", kind, identity, configPath;
    bool raw = false, overlap = false, top = false, negative = false;
    int n = 0, l = 1, maxK = 6, maxN = 7;

    auto* charCmd = app.add_subcommand("char", "Normalized character Ch_pi(lambda)");
    charCmd->add_option("--lambda", lambdaArg, "Partition, e.g. 3,1")->required();
    charCmd->add_option("--pi", piArg, "Partition")->required();
    charCmd->add_flag("--raw", raw, "Print chi^lambda(pi) instead (|pi| = |lambda|)");

    auto* spinCmd = app.add_subcommand("spinchar", "Normalized spin character Ch^spin_pi(xi)");
    spinCmd->add_option("--xi", xiArg, "Strict partition")->required();
    spinCmd->add_option("--pi", piArg, "Odd partition")->required();
    spinCmd->add_flag("--raw", raw, "Print X^xi(pi) instead (|pi| = |xi|)");

    auto* doubleCmd = app.add_subcommand("double", "The double D(xi)");
    doubleCmd->add_option("--xi", xiArg, "Strict partition")->required();
    doubleCmd->add_flag("--overlap", overlap, "Diagram and transpose share the diagonal");

    auto* evalCmd = app.add_subcommand("stanley-eval", "Evaluate a Stanley character formula");
    evalCmd->add_option("--pi", piArg, "Partition")->required();
    evalCmd->add_option("--lambda", lambdaArg, "Partition (linear mode)");
    evalCmd->add_option("--xi", xiArg, "Strict partition (spin mode)");
    evalCmd->add_option("--mode", mode, "linear or spin")->check(CLI::IsMember({"linear", "spin"}));

    auto* polyCmd = app.add_subcommand("stanley-poly", "Stanley polynomial in multirectangular coordinates");
    polyCmd->add_option("--pi", piArg, "Partition")->required();
    polyCmd->add_option("--l", l, "Number of rectangles")->check(CLI::PositiveNumber);
    polyCmd->add_option("--mode", mode, "linear or spin")->check(CLI::IsMember({"linear", "spin"}));
    polyCmd->add_flag("--top", top, "Only the top-degree part");

    auto* censusCmd = app.add_subcommand("maps-census", "All gluings of the polygons of face type pi");
    censusCmd->add_option("--pi", piArg, "Partition")->required();

    auto* verifyCmd = app.add_subcommand("verify", "Check identities over ranges");
    verifyCmd->add_option("identity", identity, "Identity name; all when omitted");
    auto* maxKOpt = verifyCmd->add_option("--max-k", maxK, "Largest |pi| (or degree)")->check(CLI::NonNegativeNumber);
    auto* maxNOpt = verifyCmd->add_option("--max-n", maxN, "Largest |xi| or |lambda|")->check(CLI::NonNegativeNumber);
    verifyCmd->add_option("--config", configPath, "JSON config file for the full suite");
    verifyCmd->add_flag("--negative-control", negative, "Perturb each formula; failures are expected");

    auto* tableCmd = app.add_subcommand("table", "Character table");
    tableCmd->add_option("--n", n, "Size")->required()->check(CLI::NonNegativeNumber);
    tableCmd->add_option("--kind", kind, "linear or spin")->required()->check(CLI::IsMember({"linear", "spin"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const Format fmt = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Plain;
    try {
        if (*charCmd) {
            const Partition lambda = parsePartition(lambdaArg);
            const Partition pi = parsePartition(piArg);
            const Integer v = raw ? chi(lambda, pi) : chNormalized(pi, lambda);
            emitValue(fmt, {{"lambda", toString(lambda)}, {"pi", toString(pi)}}, toString(v));
        } else if (*spinCmd) {
            const StrictPartition xi = parseStrictPartition(xiArg);
            const Partition pi = parsePartition(piArg);
            const std::string v = raw ? toString(spinX(xi, pi)) : toString(chSpinNormalized(pi, xi));
            emitValue(fmt, {{"xi", toString(xi)}, {"pi", toString(pi)}}, v);
        } else if (*doubleCmd) {
            const StrictPartition xi = parseStrictPartition(xiArg);
            emitValue(fmt, {{"xi", toString(xi)}}, toString(overlap ? overlapDoubleOf(xi) : doubleOf(xi)));
        } else if (*evalCmd) {
            const Partition pi = parsePartition(piArg);
            if (mode == "linear") {
                if (lambdaArg.empty())
                    throw std::invalid_argument("linear mode needs --lambda");
                const Partition lambda = parsePartition(lambdaArg);
                emitValue(fmt, {{"pi", toString(pi)}, {"lambda", toString(lambda)}, {"mode", mode}},
                          toString(chStanleyLinear(pi, lambda)));
            } else {
                if (xiArg.empty())
                    throw std::invalid_argument("spin mode needs --xi");
                const StrictPartition xi = parseStrictPartition(xiArg);
                emitValue(fmt, {{"pi", toString(pi)}, {"xi", toString(xi)}, {"mode", mode}},
                          toString(chStanleySpin(pi, xi)));
            }
        } else if (*polyCmd) {
            const Partition pi = parsePartition(piArg);
            StanleyPoly poly = mode == "spin" ? stanleyPolynomialSpin(pi, l) : stanleyPolynomialLinear(pi, l);
            if (top)
                poly = topDegreePart(poly, poly.totalDegree());
            emitPolynomial(fmt, poly, json{{"pi", toString(pi)}, {"l", l}, {"mode", mode}}, l);
        } else if (*censusCmd) {
            emitCensus(fmt, mapsCensus(parsePartition(piArg)));
        } else if (*verifyCmd) {
            if (!identity.empty()) {
                if (!configPath.empty())
                    throw std::invalid_argument("--config applies to the full suite only");
                return emitReports(fmt, {runIdentity(identity, maxK, maxN, negative)});
            }
            VerifyConfig config;
            if (!configPath.empty()) {
                std::ifstream in(configPath);
                if (!in)
                    throw std::invalid_argument("cannot read config file " + configPath);
                json j;
                try {
                    in >> j;
                } catch (const json::parse_error& e) {
                    throw std::invalid_argument(std::string("malformed config: ") + e.what());
                }
                config = verifyConfigFromJson(j);
            }
            if (*maxKOpt)
                config.maxK = maxK;
            if (*maxNOpt)
                config.maxN = maxN;
            config.negativeControls = config.negativeControls || negative;
            return emitReports(fmt, verifyAll(config));
        } else if (*tableCmd) {
            emitTable(fmt, kind == "spin" ? spinCharacterTable(n) : linearCharacterTable(n));
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
