#ifndef MSR_CODEFILE_HPP
#define MSR_CODEFILE_HPP

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "msr/search.hpp"

namespace msr {

/**
 * One parsed code document: either a compact rotationally symmetric seed
 * or a fully explicit code.
 *
 * Text format, line oriented, `#` comments and blank lines ignored:
 *
 *   msrcode 1
 *   field <p> <m> [modulus coefficients, low to high]   (modulus iff m > 1)
 *   params <n> <k>
 *   form symmetric|explicit
 *   matrix <name> <rows> <cols>
 *   <rows lines of space-separated canonical entries>
 *
 * Symmetric documents carry matrices A, R, B1..B<n-1>; explicit documents
 * carry A1..An and B<i>_<j> for every ordered pair i != j (1-based names).
 * A stream may hold several documents back to back.
 */
struct CodeDocument {
    std::variant<SymmetricSeed, RegeneratingCode> value;

    bool is_symmetric() const { return std::holds_alternative<SymmetricSeed>(value); }
    const SymmetricSeed& seed() const { return std::get<SymmetricSeed>(value); }
    const RegeneratingCode& code() const { return std::get<RegeneratingCode>(value); }

    /// The explicit view regardless of stored form.
    RegeneratingCode expanded() const { return is_symmetric() ? expand(seed()) : code(); }
};

/// Parses every document in the stream; throws ParseError with a 1-based
/// line number on malformed input.
std::vector<CodeDocument> parse_code_documents(std::istream& in);
std::vector<CodeDocument> parse_code_documents(const std::string& text);

void write_code(std::ostream& out, const SymmetricSeed& seed);
void write_code(std::ostream& out, const RegeneratingCode& code);
void write_code(std::ostream& out, const CodeDocument& doc);

std::string to_text(const SymmetricSeed& seed);
std::string to_text(const RegeneratingCode& code);

/// Flat key=value block; with `include_codes`, each emitted seed follows
/// under a `code:` marker in the document format above.
std::string render_report(const SearchReport& report, bool include_codes);

}  // namespace msr

#endif
