#pragma once

// Text, JSON and CSV forms of functions, distributions, enumerators and verdicts.
//
// Function table text format:
//   m=<int>
//   <3^m characters from {0,1,2} in enumeration order>
//
// Code JSON:
//   {"m":..., "length":..., "dimension":..., "weights":[[w,count],...], "cwe":[[t0,t1,t2,count],...]}
// with both arrays sorted ascending.

#include "ternmin/code.hpp"
#include "ternmin/minimality.hpp"

#include <iosfwd>
#include <json.hpp>
#include <stdexcept>
#include <string>

namespace ternmin {

/// Malformed input text.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void write_function_table(std::ostream& os, const TernaryFunction& f);
TernaryFunction read_function_table(std::istream& is);
TernaryFunction load_function_table(const std::string& path);

nlohmann::json code_json(int m, int dimension, const WeightDistribution* weights, const CompleteWeightEnumerator* cwe);
WeightDistribution weights_from_json(const nlohmann::json& j);
CompleteWeightEnumerator cwe_from_json(const nlohmann::json& j);

std::string weights_csv(const WeightDistribution& d);
std::string cwe_csv(const CompleteWeightEnumerator& e);

/// One line per term: "<count> w0^t0 w1^t1 w2^t2".
std::string cwe_text(const CompleteWeightEnumerator& e);
std::string weights_text(const WeightDistribution& d);

nlohmann::json params_json(const CodewordParams& p);
nlohmann::json verdict_json(const MinimalityVerdict& v);

} // namespace ternmin
