#pragma once

#include "discrim/completion.hpp"
#include "discrim/lattice.hpp"

#include <json.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>

namespace discrim {

using json = nlohmann::json;

/// Malformed input document. line and column are 1-based; 0 when unknown.
class InputError : public std::runtime_error {
public:
    InputError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
        : std::runtime_error(what), line_(line), column_(column) {}
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

json to_json(const Scalar& s);
json to_json(const Vector& v);
json to_json(const Field& f);
json to_json(const Arrangement& a);

/// Arrangement document from raw text; scalar errors point at the offending literal.
Arrangement parse_arrangement(const std::string& text);
Arrangement load_arrangement(const std::string& path);

/// SHA-256 (hex) of the canonical serialization of the arrangement.
std::string canonical_hash(const Arrangement& a);

/// 1-based index lists, as used in every report.
json one_based(const std::vector<std::size_t>& v);
json family_json(const DiscriminantalArrangement& b, const Flat& f);

json to_json(const Involution& s);
json to_json(const CompletionResult& c);
/// Completion document for an arrangement of n lines.
CompletionResult parse_completion(const std::string& text, std::size_t n);

json to_json(const IncidenceStats& st);

std::string read_file(const std::string& path);

}  // namespace discrim
