#ifndef BRAIDLAB_IO_HPP
#define BRAIDLAB_IO_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "braidlab/braid.hpp"
#include "braidlab/characters.hpp"
#include "braidlab/matrix_model.hpp"
#include "braidlab/permutation.hpp"
#include "braidlab/symmetry.hpp"

namespace braidlab::io
{

using Json = nlohmann::ordered_json;

/// Whitespace-separated nonzero integers; "" is the identity.
BraidWord parse_braid_word(std::string_view text);
std::string format_braid_word(const BraidWord& w);

/// Cycle notation "(0 1)(2 3 4)", "()" for the identity. Overlapping cycles
/// multiply left to right.
Permutation parse_cycles(std::string_view text);
std::string format_cycles(const Permutation& p);

/// {"map": {"0": 1, "1": 0}}
Permutation permutation_from_json(const Json& j);
Json permutation_to_json(const Permutation& p);

/// Accepts cycle notation or the JSON object form.
Permutation parse_permutation(std::string_view text);

/// {"a": ["1/2", "1/2"], "b": []}
ThomaParams thoma_from_json(const Json& j);
Json thoma_to_json(const ThomaParams& p);

/// [{"c": ["1/2", "0"], "w": [1, -2]}]
GroupPolynomial polynomial_from_json(const Json& j);
Json polynomial_to_json(const GroupPolynomial& x);

/// {"d": 2, "weights": ["1/2", "1/2"], "sites": 6, "cap": 4096}
MatrixModel model_from_json(const Json& j);
Json model_to_json(const MatrixModel& m);

Json normal_form_to_json(const GarsideNormalForm& nf);

/// {"property": ..., "maxlen": ..., "maxidx": ..., "tol": ..., "verdict": "pass"|"fail", "witnesses": [...]}
Json report_to_json(const SymmetryReport& r);

/// Parses JSON text, reporting the byte offset of a syntax error.
Json parse_json(std::string_view text);

/// Reads a file, or returns the argument itself when it starts with '{' or '['.
std::string read_text_argument(const std::string& argument);

} // namespace braidlab::io

#endif // BRAIDLAB_IO_HPP
