#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "jacquet/classical.hpp"
#include "jacquet/transforms.hpp"

namespace jacquet {

enum class Format { text, json, latex };
Format parse_format(std::string_view s);

std::string text(const GLIrred& g);
std::string text(const ClassicalIrred& x);
std::string latex(HalfInt h);
std::string latex(const GLIrred& g);
std::string latex(const ClassicalIrred& x);

nlohmann::json to_json(HalfInt h);
nlohmann::json to_json(const Segment& s);
nlohmann::json to_json(const GLIrred& g);
nlohmann::json to_json(const AdmissibleTriple& t);
nlohmann::json to_json(const ClassicalIrred& x);
nlohmann::json to_json(const TensorClsSum& x);
nlohmann::json to_json(const GLTensorSum& x);
nlohmann::json to_json(const SeqMultiset& x);

HalfInt halfint_from_json(const nlohmann::json& j);
GLIrred glirred_from_json(const nlohmann::json& j);
AdmissibleTriple triple_from_json(const nlohmann::json& j, HalfInt alpha);
ClassicalIrred symbol_from_json(const nlohmann::json& j);
TensorClsSum tensor_sum_from_json(const nlohmann::json& j);
GLTensorSum gl_tensor_sum_from_json(const nlohmann::json& j);

// One term per line, sorted by the rendered term; "0" for the empty sum.
// JSON output is a single line; every format ends with a newline.
std::string render(const TensorClsSum& x, Format f);
std::string render(const GLTensorSum& x, Format f);
std::string render(const ClassicalIrred& x, Format f);
std::string render(const SeqMultiset& x, Format f);
std::string render(const Tensor3ClsSum& x, Format f);

// Symbol grammar: sigma | full(c,d) | plus(c,d) | minus(c,d) | tau(c,d,+1)
// | lang(c,d) | sp(n_eps,...,n_alpha) | ds{...json triple...}.
// Named symbols go through resolve_symbol; a zero symbol is rejected.
ClassicalIrred parse_symbol(std::string_view text, HalfInt alpha);

}  // namespace jacquet
