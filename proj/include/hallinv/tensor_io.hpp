#ifndef HALLINV_TENSOR_IO_HPP
#define HALLINV_TENSOR_IO_HPP

// Tensor file format: {"k": [k121, k122, k123, k131, k132, k133, k231, k232, k233]}.
// Entries are JSON numbers; strings "p/q" (or decimal text) are also accepted.

#include "hallinv/tensor.hpp"

#include <stdexcept>
#include <string>

namespace hallinv {

class TensorParseError : public std::runtime_error {
public:
    TensorParseError(std::string field, const std::string& message)
        : std::runtime_error(field + ": " + message), m_field(std::move(field)) {}
    /// e.g. "k", "k[3]", or "<document>".
    const std::string& field() const { return m_field; }

private:
    std::string m_field;
};

HallTensor parse_hall_json(const std::string& text);
/// Exact reading: integers and "p/q" strings exactly, JSON floats from their
/// shortest round-trip decimal text (0.1 -> 1/10).
ExactHallTensor parse_exact_hall_json(const std::string& text);

/// Reads a whole file; throws TensorParseError("<file>", ...) when unreadable.
std::string read_text_file(const std::string& path);

}  // namespace hallinv

#endif  // HALLINV_TENSOR_IO_HPP
