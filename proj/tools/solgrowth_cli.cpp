#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "solgrowth/json_io.hpp"
#include "solgrowth/oracle.hpp"
#include "solgrowth/sol_language.hpp"

namespace {

using namespace solgrowth;
using ordered = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitResource = 3;
constexpr int kExitMismatch = 4;

std::string readInput(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void writeOutput(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text << "\n";
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::invalid_argument("cannot open '" + path + "' for writing");
    f << text << "\n";
}

std::vector<GroupWord> parseGenerators(const std::string& list) {
    std::vector<GroupWord> gens;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) gens.push_back(parseWord(item));
    return gens;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact growth-series toolkit for torus bundle lattices"};
    app.require_subcommand(1);

    std::string format = "json";
    app.add_option("--format", format, "output format: json|csv|text")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    // eval
    auto* evalCmd = app.add_subcommand("eval", "evaluate a word to its type, height and element");
    std::int64_t evalTrace = 0;
    std::string evalWordText;
    evalCmd->add_option("--trace", evalTrace, "monodromy trace, |T| >= 3")->required();
    evalCmd->add_option("--word", evalWordText, "word over a,A,t,T")->required();

    // geodesic
    auto* geoCmd = app.add_subcommand("geodesic", "shortest word for a given type and height");
    std::string geoPoly;
    std::int64_t geoHeight = 0;
    geoCmd->add_option("--poly", geoPoly, "Laurent polynomial, e.g. 2z^-2+5+z^3")->required();
    geoCmd->add_option("--height", geoHeight, "height")->required();

    // equal
    auto* eqCmd = app.add_subcommand("equal", "group equality of two words");
    std::int64_t eqTrace = 0;
    std::string eqW1, eqW2;
    eqCmd->add_option("--trace", eqTrace)->required();
    eqCmd->add_option("--word1", eqW1)->required();
    eqCmd->add_option("--word2", eqW2)->required();

    // ball
    auto* ballCmd = app.add_subcommand("ball", "Cayley-graph sphere counts by BFS");
    std::int64_t ballTrace = 0;
    std::string ballGens = "a,t";
    int ballRadius = 0;
    std::size_t ballMax = 50000000;
    ballCmd->add_option("--trace", ballTrace)->required();
    ballCmd->add_option("--gens", ballGens, "comma-separated generator words");
    ballCmd->add_option("--radius", ballRadius)->required();
    ballCmd->add_option("--max-elements", ballMax, "element budget");

    // series-fsa
    auto* seriesCmd = app.add_subcommand("series-fsa", "rational series of an automaton file");
    std::string seriesInput;
    seriesCmd->add_option("--input", seriesInput, "automaton JSON file or -")->required();

    // build-ln
    auto* lnCmd = app.add_subcommand("build-ln", "layered language automaton");
    int lnN = 1;
    bool lnNonStrict = false;
    std::string lnOutput;
    lnCmd->add_option("--n", lnN, "coefficient bound")->required();
    lnCmd->add_flag("--non-strict", lnNonStrict, "allow (0,2) end letters");
    lnCmd->add_option("--output", lnOutput, "output file (default stdout)");

    // build-acceptor
    auto* accCmd = app.add_subcommand("build-acceptor", "class acceptor automaton");
    int accN = 1;
    std::int64_t accTrace = 0;
    std::optional<int> accSlack;
    std::string accOutput;
    accCmd->add_option("--n", accN, "coefficient bound")->required();
    accCmd->add_option("--trace", accTrace)->required();
    accCmd->add_option("--slack", accSlack,
                       "tail/head alignment slack i; omitted: exact-alignment acceptor");
    accCmd->add_option("--output", accOutput, "output file (default stdout)");

    // pipeline
    auto* pipeCmd = app.add_subcommand("pipeline", "cross-section and growth series");
    std::int64_t pipeTrace = 0;
    std::optional<int> pipeN;
    std::optional<std::int64_t> pipeK;
    std::optional<int> pipeI;
    pipeCmd->add_option("--trace", pipeTrace)->required();
    pipeCmd->add_option("--n", pipeN, "override coefficient bound");
    pipeCmd->add_option("--K", pipeK, "override fellow-traveler constant");
    pipeCmd->add_option("--slack", pipeI, "override alignment slack");

    // verify-parry
    auto* parryCmd = app.add_subcommand("verify-parry", "cross-validate BFS against the closed form");
    std::int64_t parryHalf = 3;
    int parryRadius = 12;
    parryCmd->add_option("--half-trace", parryHalf, "half of the monodromy trace");
    parryCmd->add_option("--radius", parryRadius, "BFS radius");

    // constants
    auto* constCmd = app.add_subcommand("constants", "fellow-traveler constants");
    std::int64_t constTrace = 0;
    int constN = 0;
    constCmd->add_option("--trace", constTrace)->required();
    constCmd->add_option("--n", constN, "coefficient bound for C (default 5|T|)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*evalCmd) {
            GroupParams params(evalTrace);
            GroupWord w = parseWord(evalWordText);
            XElement x = evalWord(w);
            GroupElement g = toGroupElement(x, params);
            if (format == "text") {
                std::cout << "type " << x.utype.toString() << "\nheight " << x.height
                          << "\nelement (" << g.x[0] << "," << g.x[1] << "," << g.h << ")\n";
            } else {
                ordered j;
                j["type"] = x.utype.toString();
                j["height"] = x.height;
                j["element"] = {{"x1", g.x[0]}, {"x2", g.x[1]}, {"h", g.h}};
                std::cout << j.dump(2) << "\n";
            }
            return kExitOk;
        }
        if (*geoCmd) {
            XElement x{LaurentPoly::parse(geoPoly), geoHeight};
            GroupWord w = geodesicWord(x);
            std::int64_t len = geodesicLength(x);
            if (format == "text") {
                std::cout << wordToString(w) << "\nlength " << len << "\n";
            } else {
                ordered j;
                j["word"] = wordToString(w);
                j["length"] = len;
                std::cout << j.dump(2) << "\n";
            }
            return kExitOk;
        }
        if (*eqCmd) {
            GroupParams params(eqTrace);
            bool eq = equalWords(parseWord(eqW1), parseWord(eqW2), params);
            if (format == "text") {
                std::cout << (eq ? "equal" : "different") << "\n";
            } else {
                ordered j;
                j["equal"] = eq;
                std::cout << j.dump(2) << "\n";
            }
            return kExitOk;
        }
        if (*ballCmd) {
            SphereCounts c = ballBFS(ballTrace, parseGenerators(ballGens), ballRadius, ballMax);
            if (format == "json") {
                ordered j;
                j["trace"] = c.trace;
                j["radius"] = c.radius;
                j["counts"] = c.counts;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << sphereCountsCsv(c);
            }
            return kExitOk;
        }
        if (*seriesCmd) {
            MultiTapeAutomaton m = automatonFromJson(readInput(seriesInput));
            if (!m.deterministic) m = determinize(m);
            RationalSeries s = growthSeries(m);
            std::cout << seriesToJson(s) << "\n";
            return kExitOk;
        }
        if (*lnCmd) {
            writeOutput(lnOutput, automatonToJson(buildLn(lnN, !lnNonStrict)));
            return kExitOk;
        }
        if (*accCmd) {
            MultiTapeAutomaton m = accSlack ? acceptorRni(accN, *accSlack, accTrace)
                                            : acceptorRnPrime(accN, accTrace);
            writeOutput(accOutput, automatonToJson(m));
            return kExitOk;
        }
        if (*pipeCmd) {
            std::optional<SolPipelineOverrides> ov;
            if (pipeN || pipeK || pipeI) {
                if (!(pipeN && pipeK && pipeI))
                    throw std::invalid_argument("overrides require --n, --K and --slack together");
                ov = SolPipelineOverrides{*pipeN, *pipeK, *pipeI};
            }
            SolPipelineOutcome out = solPipeline(pipeTrace, ov);
            if (out.refused) {
                std::cout << errorJson("resource_limit", out.refusalReason, out.stateEstimate)
                          << "\n";
                return kExitResource;
            }
            ordered j;
            j["theorem_scale"] = out.theoremScale;
            j["cross_section"] = ordered::parse(automatonToJson(out.crossSection));
            j["series"] = ordered::parse(seriesToJson(out.series));
            std::cout << j.dump(2) << "\n";
            return kExitOk;
        }
        if (*parryCmd) {
            RationalSeries s = parrySeries(parryHalf);
            SphereCounts c = ballBFS(2 * parryHalf, {parseWord("a"), parseWord("taT"),
                                                     parseWord("t")},
                                     parryRadius);
            SeriesComparison rep = compareSeries(s, c);
            std::cout << comparisonToJson(rep) << "\n";
            return rep.exactMatch ? kExitOk : kExitMismatch;
        }
        if (*constCmd) {
            std::int64_t at = constTrace < 0 ? -constTrace : constTrace;
            int n = constN > 0 ? constN : static_cast<int>(5 * at);
            SolConstants c = solConstants(constTrace, n);
            ordered j;
            j["trace"] = c.trace;
            j["B"] = c.B;
            j["C"] = c.C;
            j["L"] = c.L;
            j["K"] = c.K;
            j["N"] = c.N;
            j["fellow_constant"] = c.fellowConstant;
            std::cout << j.dump(2) << "\n";
            return kExitOk;
        }
    } catch (const ResourceLimitError& e) {
        std::cerr << errorJson("resource_limit", e.what()) << "\n";
        return kExitResource;
    } catch (const OverflowError& e) {
        std::cerr << errorJson("overflow", e.what()) << "\n";
        return kExitResource;
    } catch (const std::invalid_argument& e) {
        std::cerr << errorJson("invalid_input", e.what()) << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << errorJson("internal_error", e.what()) << "\n";
        return kExitInvalid;
    }
    return kExitInvalid;
}
