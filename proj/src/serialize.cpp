#include "ternmin/serialize.hpp"

#include <fstream>
#include <sstream>

namespace ternmin {

void write_function_table(std::ostream& os, const TernaryFunction& f) {
    os << "m=" << f.dimension() << '\n';
    for (std::uint8_t v : f.table()) os << static_cast<char>('0' + v);
    os << '\n';
}

namespace {

void strip_cr(std::string& s) {
    if (!s.empty() && s.back() == '\r') s.pop_back();
}

} // namespace

TernaryFunction read_function_table(std::istream& is) {
    std::string header, body;
    if (!std::getline(is, header)) throw FormatError("function table: missing header line");
    strip_cr(header);
    if (header.rfind("m=", 0) != 0) throw FormatError("function table: header must be m=<int>");
    int m = 0;
    std::size_t used = 0;
    try {
        m = std::stoi(header.substr(2), &used);
    } catch (const std::exception&) {
        throw FormatError("function table: bad dimension '" + header.substr(2) + "'");
    }
    if (used != header.size() - 2) throw FormatError("function table: trailing characters after dimension");
    if (m < 1 || m > kMaxDimension) throw FormatError("function table: m out of range");
    if (!std::getline(is, body)) throw FormatError("function table: missing value line");
    strip_cr(body);
    if (body.size() != pow3(m))
        throw FormatError("function table: expected " + std::to_string(pow3(m)) + " values, got " +
                          std::to_string(body.size()));
    std::vector<std::uint8_t> values(body.size());
    for (std::size_t i = 0; i < body.size(); ++i) {
        if (body[i] < '0' || body[i] > '2') throw FormatError("function table: value outside {0,1,2} at " + std::to_string(i));
        values[i] = static_cast<std::uint8_t>(body[i] - '0');
    }
    std::string rest;
    while (std::getline(is, rest)) {
        strip_cr(rest);
        if (!rest.empty()) throw FormatError("function table: unexpected trailing content");
    }
    return TernaryFunction(m, std::move(values));
}

TernaryFunction load_function_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    return read_function_table(in);
}

nlohmann::json code_json(int m, int dimension, const WeightDistribution* weights, const CompleteWeightEnumerator* cwe) {
    nlohmann::json j;
    j["m"] = m;
    j["length"] = pow3(m) - 1;
    j["dimension"] = dimension;
    if (weights) {
        auto arr = nlohmann::json::array();
        for (const auto& [w, c] : weights->entries) arr.push_back({w, c});
        j["weights"] = std::move(arr);
    }
    if (cwe) {
        auto arr = nlohmann::json::array();
        for (const auto& [e, c] : cwe->terms) arr.push_back({e[0], e[1], e[2], c});
        j["cwe"] = std::move(arr);
    }
    return j;
}

WeightDistribution weights_from_json(const nlohmann::json& j) {
    WeightDistribution d;
    for (const auto& row : j.at("weights")) {
        if (row.size() != 2) throw FormatError("weights row must have 2 entries");
        d.entries[row[0].get<std::int64_t>()] += row[1].get<std::uint64_t>();
    }
    return d;
}

CompleteWeightEnumerator cwe_from_json(const nlohmann::json& j) {
    CompleteWeightEnumerator e;
    for (const auto& row : j.at("cwe")) {
        if (row.size() != 4) throw FormatError("cwe row must have 4 entries");
        e.terms[{row[0].get<std::int64_t>(), row[1].get<std::int64_t>(), row[2].get<std::int64_t>()}] +=
            row[3].get<std::uint64_t>();
    }
    return e;
}

std::string weights_csv(const WeightDistribution& d) {
    std::ostringstream os;
    os << "weight,count\n";
    for (const auto& [w, c] : d.entries) os << w << ',' << c << '\n';
    return os.str();
}

std::string cwe_csv(const CompleteWeightEnumerator& e) {
    std::ostringstream os;
    os << "t0,t1,t2,count\n";
    for (const auto& [t, c] : e.terms) os << t[0] << ',' << t[1] << ',' << t[2] << ',' << c << '\n';
    return os.str();
}

std::string cwe_text(const CompleteWeightEnumerator& e) {
    std::ostringstream os;
    for (const auto& [t, c] : e.terms) os << c << " w0^" << t[0] << " w1^" << t[1] << " w2^" << t[2] << '\n';
    return os.str();
}

std::string weights_text(const WeightDistribution& d) {
    std::ostringstream os;
    for (const auto& [w, c] : d.entries) os << "A_" << w << " = " << c << '\n';
    return os.str();
}

nlohmann::json params_json(const CodewordParams& p) {
    return {{"u", p.u.value()}, {"r", p.r.value()}, {"v", p.v}};
}

nlohmann::json verdict_json(const MinimalityVerdict& v) {
    nlohmann::json j;
    j["method"] = std::string(method_name(v.method));
    j["minimal"] = v.minimal;
    auto witnesses = nlohmann::json::array();
    for (const auto& w : v.witnesses) {
        if (const auto* cw = std::get_if<CoverWitness>(&w)) {
            witnesses.push_back({{"kind", "cover"}, {"coverer", params_json(cw->coverer)}, {"covered", params_json(cw->covered)}});
        } else {
            const auto& c = std::get<ConditionWitness>(w);
            witnesses.push_back({{"kind", "condition"},
                                 {"condition", std::string(condition_name(c.condition))},
                                 {"first", std::string(member_name(c.first))},
                                 {"second", std::string(member_name(c.second))},
                                 {"v1", c.v1},
                                 {"v2", c.v2},
                                 {"v3", c.v3}});
        }
    }
    j["witnesses"] = std::move(witnesses);
    return j;
}

} // namespace ternmin
