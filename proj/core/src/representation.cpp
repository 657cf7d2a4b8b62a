#include "planiv/representation.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "planiv/errors.hpp"

namespace planiv {

void Representation::add(int vertex, Interval iv) {
    if (!(iv.lo < iv.hi))
        throw ValidationError("interval endpoints must satisfy lo < hi");
    auto& list = intervals[vertex];
    auto pos = std::lower_bound(list.begin(), list.end(), iv,
                                [](const Interval& a, const Interval& b) {
                                    return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
                                });
    list.insert(pos, std::move(iv));
}

std::vector<int> Representation::vertices() const {
    std::vector<int> out;
    out.reserve(intervals.size());
    for (const auto& [v, ivs] : intervals) out.push_back(v);
    return out;
}

std::vector<Interval> merged_intervals(const std::vector<Interval>& ivs) {
    std::vector<Interval> sorted = ivs;
    std::sort(sorted.begin(), sorted.end(), [](const Interval& a, const Interval& b) {
        return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
    });
    std::vector<Interval> out;
    for (const auto& iv : sorted) {
        if (!out.empty() && iv.lo <= out.back().hi)
            out.back().hi = std::max(out.back().hi, iv.hi);
        else
            out.push_back(iv);
    }
    return out;
}

Representation restrict_representation(const Representation& rep,
                                       const std::vector<int>& keep) {
    Representation out;
    for (int v : keep) {
        auto it = rep.intervals.find(v);
        if (it != rep.intervals.end()) out.intervals[v] = it->second;
    }
    return out;
}

std::string representation_to_json(const Representation& rep) {
    nlohmann::ordered_json verts;
    for (const auto& [v, ivs] : rep.intervals) {
        auto sorted = ivs;
        std::sort(sorted.begin(), sorted.end(), [](const Interval& a, const Interval& b) {
            return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
        });
        auto arr = nlohmann::ordered_json::array();
        for (const auto& iv : sorted)
            arr.push_back({rational_to_string(iv.lo), rational_to_string(iv.hi)});
        verts[std::to_string(v)] = std::move(arr);
    }
    nlohmann::ordered_json j;
    j["vertices"] = std::move(verts);
    return j.dump() + "\n";
}

Representation representation_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), 0, e.byte);
    }
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_object())
        throw ParseError("representation JSON must be {\"vertices\": {...}}");
    Representation rep;
    for (const auto& [key, arr] : j["vertices"].items()) {
        int v;
        try {
            std::size_t used = 0;
            v = std::stoi(key, &used);
            if (used != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
            throw ParseError("vertex key '" + key + "' is not an integer");
        }
        if (!arr.is_array() || arr.empty())
            throw ParseError("vertex " + key + " needs a non-empty interval list");
        for (const auto& pair : arr) {
            if (!pair.is_array() || pair.size() != 2)
                throw ParseError("interval must be a [lo, hi] pair");
            auto endpoint = [](const nlohmann::json& e) {
                if (e.is_string()) return rational_from_string(e.get<std::string>());
                if (e.is_number_integer())
                    return rational_from_string(std::to_string(e.get<long long>()));
                throw ParseError("interval endpoint must be a string rational or integer");
            };
            Rational lo = endpoint(pair[0]), hi = endpoint(pair[1]);
            if (!(lo < hi))
                throw ValidationError("interval for vertex " + key +
                                      " has lo >= hi: [" + rational_to_string(lo) + "," +
                                      rational_to_string(hi) + "]");
            rep.add(v, {std::move(lo), std::move(hi)});
        }
    }
    return rep;
}

}  // namespace planiv
