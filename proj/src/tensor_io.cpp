#include "hallinv/tensor_io.hpp"

#include <json.hpp>

#include <array>
#include <cmath>
#include <fstream>
#include <sstream>

namespace hallinv {

namespace {

using nlohmann::json;

const json& component_array(const json& doc)
{
    if (!doc.is_object()) throw TensorParseError("<document>", "expected a JSON object");
    auto it = doc.find("k");
    if (it == doc.end()) throw TensorParseError("k", "missing field");
    if (!it->is_array()) throw TensorParseError("k", "expected an array of 9 entries");
    if (it->size() != 9) throw TensorParseError("k", "expected 9 entries, got " + std::to_string(it->size()));
    return *it;
}

json parse_document(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw TensorParseError("<document>", e.what());
    }
}

std::string field_name(std::size_t n)
{
    return "k[" + std::to_string(n) + "]";
}

Rational exact_entry(const json& v, std::size_t n)
{
    try {
        if (v.is_number_integer()) return Rational::parse(v.dump());
        if (v.is_number_float()) return Rational::parse(v.dump());
        if (v.is_string()) return Rational::parse(v.get<std::string>());
    } catch (const std::exception& e) {
        throw TensorParseError(field_name(n), e.what());
    }
    throw TensorParseError(field_name(n), "expected a number or a \"p/q\" string");
}

}  // namespace

HallTensor parse_hall_json(const std::string& text)
{
    const json doc = parse_document(text);
    const json& k = component_array(doc);
    std::array<double, 9> c{};
    for (std::size_t n = 0; n < 9; ++n) {
        const json& v = k[n];
        if (v.is_number()) {
            c[n] = v.get<double>();
        } else if (v.is_string()) {
            c[n] = exact_entry(v, n).to_double();
        } else {
            throw TensorParseError(field_name(n), "expected a number or a \"p/q\" string");
        }
        if (!std::isfinite(c[n])) throw TensorParseError(field_name(n), "not finite");
    }
    return hall_from_components(c);
}

ExactHallTensor parse_exact_hall_json(const std::string& text)
{
    const json doc = parse_document(text);
    const json& k = component_array(doc);
    std::array<Rational, 9> c;
    for (std::size_t n = 0; n < 9; ++n) c[n] = exact_entry(k[n], n);
    return ExactHallTensor(c);
}

std::string read_text_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw TensorParseError("<file>", "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace hallinv
