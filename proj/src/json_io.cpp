#include "solgrowth/json_io.hpp"

#include <json.hpp>

#include <stdexcept>

namespace solgrowth {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

std::string automatonToJson(const MultiTapeAutomaton& m) {
    ordered j;
    j["tapes"] = m.tapes;
    j["alphabet"] = m.alphabet;
    ordered w = ordered::object();
    for (const auto& [letter, weight] : m.weights) w[letter] = weight;
    j["weights"] = w;
    j["states"] = m.stateCount;
    j["start"] = m.start;
    j["finals"] = std::vector<int>(m.finals.begin(), m.finals.end());
    ordered ts = ordered::array();
    for (const auto& t : m.transitions) {
        ordered e;
        e["from"] = t.from;
        e["label"] = t.label;
        e["to"] = t.to;
        ts.push_back(e);
    }
    j["transitions"] = ts;
    j["deterministic"] = m.deterministic;
    return j.dump(2);
}

MultiTapeAutomaton automatonFromJson(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("bad automaton JSON: ") + e.what());
    }
    MultiTapeAutomaton m;
    try {
        m.tapes = j.at("tapes").get<int>();
        m.alphabet = j.at("alphabet").get<std::vector<std::string>>();
        for (const auto& [letter, weight] : j.at("weights").items())
            m.weights[letter] = weight.get<std::int64_t>();
        m.stateCount = j.at("states").get<int>();
        m.start = j.at("start").get<int>();
        for (int f : j.at("finals").get<std::vector<int>>()) m.finals.insert(f);
        for (const auto& e : j.at("transitions")) {
            Transition t;
            t.from = e.at("from").get<int>();
            t.label = e.at("label").get<std::vector<std::string>>();
            t.to = e.at("to").get<int>();
            m.transitions.push_back(t);
        }
        if (j.contains("deterministic")) m.deterministic = j["deterministic"].get<bool>();
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("bad automaton JSON: ") + e.what());
    }
    if (m.tapes < 1) throw std::invalid_argument("bad automaton JSON: tapes < 1");
    for (const auto& t : m.transitions) {
        if (t.from < 0 || t.from >= m.stateCount || t.to < 0 || t.to >= m.stateCount)
            throw std::invalid_argument("bad automaton JSON: transition state out of range");
        if (static_cast<int>(t.label.size()) != m.tapes)
            throw std::invalid_argument("bad automaton JSON: label arity mismatch");
    }
    return m;
}

std::string seriesToJson(const RationalSeries& s) {
    ordered j;
    j["numerator"] = s.numerator;
    j["denominator"] = s.denominator;
    return j.dump(2);
}

RationalSeries seriesFromJson(const std::string& text) {
    try {
        json j = json::parse(text);
        RationalSeries s;
        s.numerator = j.at("numerator").get<std::vector<std::int64_t>>();
        s.denominator = j.at("denominator").get<std::vector<std::int64_t>>();
        return s;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("bad series JSON: ") + e.what());
    }
}

std::string comparisonToJson(const SeriesComparison& c) {
    ordered j;
    j["expected"] = c.expected;
    j["observed"] = c.observed;
    j["diff"] = c.diff;
    j["exact_match"] = c.exactMatch;
    j["recurrence_holds"] = c.recurrenceHolds;
    j["matched_convention"] = c.matchedConvention;
    j["generator_letter_weight"] = 1;
    return j.dump(2);
}

std::string errorJson(const std::string& code, const std::string& message,
                      const std::string& stateEstimate) {
    ordered j;
    j["error"] = code;
    j["message"] = message;
    if (!stateEstimate.empty()) j["state_estimate"] = stateEstimate;
    return j.dump(2);
}

}  // namespace solgrowth
