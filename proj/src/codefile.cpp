#include "msr/codefile.hpp"

#include <map>
#include <sstream>

namespace msr {

namespace {

struct Line {
    int number = 0;  // 1-based
    std::vector<std::string> tokens;
};

// Strips comments, splits on whitespace, drops empty lines.
std::vector<Line> tokenize(std::istream& in) {
    std::vector<Line> lines;
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        Line line;
        line.number = number;
        std::string tok;
        while (ls >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

long long to_int(const std::string& tok, int line) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError("expected integer, got '" + tok + "'", line);
    }
}

class DocParser {
  public:
    DocParser(const std::vector<Line>& lines, std::size_t& cursor) : lines_(lines), cursor_(cursor) {}

    CodeDocument parse() {
        expect_keyword("msrcode");
        if (current().tokens.size() != 2 || current().tokens[1] != "1")
            throw ParseError("unsupported format version", current().number);
        advance();

        const FieldPtr field = parse_field();
        const CodeParameters params = parse_params();
        const std::string form = parse_form();
        auto matrices = parse_matrices(field);

        if (form == "symmetric") return {assemble_seed(params, field, matrices)};
        return {assemble_explicit(params, field, matrices)};
    }

  private:
    const std::vector<Line>& lines_;
    std::size_t& cursor_;

    const Line& current() const {
        if (cursor_ >= lines_.size())
            throw ParseError("unexpected end of input",
                             lines_.empty() ? 1 : lines_.back().number);
        return lines_[cursor_];
    }
    void advance() { ++cursor_; }
    bool done() const { return cursor_ >= lines_.size(); }

    void expect_keyword(const std::string& kw) {
        if (current().tokens[0] != kw)
            throw ParseError("expected '" + kw + "' line", current().number);
    }

    FieldPtr parse_field() {
        expect_keyword("field");
        const Line& line = current();
        if (line.tokens.size() < 3) throw ParseError("field line needs p and m", line.number);
        const int p = static_cast<int>(to_int(line.tokens[1], line.number));
        const int m = static_cast<int>(to_int(line.tokens[2], line.number));
        std::vector<int> modulus;
        for (std::size_t i = 3; i < line.tokens.size(); ++i)
            modulus.push_back(static_cast<int>(to_int(line.tokens[i], line.number)));
        if (m > 1 && modulus.empty())
            throw ParseError("extension field requires a modulus", line.number);
        if (m == 1 && !modulus.empty())
            throw ParseError("prime field must not carry a modulus", line.number);
        advance();
        try {
            return Field::make(p, m, std::move(modulus));
        } catch (const Error& e) {
            throw ParseError(e.what(), line.number);
        }
    }

    CodeParameters parse_params() {
        expect_keyword("params");
        const Line& line = current();
        if (line.tokens.size() != 3) throw ParseError("params line needs n and k", line.number);
        const int n = static_cast<int>(to_int(line.tokens[1], line.number));
        const int k = static_cast<int>(to_int(line.tokens[2], line.number));
        advance();
        try {
            return CodeParameters::make(n, k);
        } catch (const Error& e) {
            throw ParseError(e.what(), line.number);
        }
    }

    std::string parse_form() {
        expect_keyword("form");
        const Line& line = current();
        if (line.tokens.size() != 2 || (line.tokens[1] != "symmetric" && line.tokens[1] != "explicit"))
            throw ParseError("form must be 'symmetric' or 'explicit'", line.number);
        advance();
        return line.tokens[1];
    }

    std::map<std::string, FieldMatrix> parse_matrices(const FieldPtr& field) {
        std::map<std::string, FieldMatrix> out;
        while (!done() && current().tokens[0] == "matrix") {
            const Line& head = current();
            if (head.tokens.size() != 4) throw ParseError("matrix line needs name, rows, cols", head.number);
            const std::string name = head.tokens[1];
            const int rows = static_cast<int>(to_int(head.tokens[2], head.number));
            const int cols = static_cast<int>(to_int(head.tokens[3], head.number));
            if (rows < 1 || cols < 1) throw ParseError("matrix dimensions must be positive", head.number);
            if (out.count(name)) throw ParseError("duplicate matrix '" + name + "'", head.number);
            advance();
            FieldMatrix m(field, rows, cols);
            for (int r = 0; r < rows; ++r) {
                const Line& row = current();
                if (static_cast<int>(row.tokens.size()) != cols)
                    throw ParseError("expected " + std::to_string(cols) + " entries", row.number);
                for (int c = 0; c < cols; ++c) {
                    const long long v = to_int(row.tokens[static_cast<std::size_t>(c)], row.number);
                    if (v < 0 || v >= field->order())
                        throw ParseError("entry out of field range", row.number);
                    m(r, c) = static_cast<std::uint8_t>(v);
                }
                advance();
            }
            out.emplace(name, std::move(m));
        }
        return out;
    }

    FieldMatrix take(std::map<std::string, FieldMatrix>& pool, const std::string& name) {
        auto it = pool.find(name);
        if (it == pool.end())
            throw ParseError("missing matrix '" + name + "'",
                             lines_.empty() ? 1 : lines_[cursor_ ? cursor_ - 1 : 0].number);
        FieldMatrix m = std::move(it->second);
        pool.erase(it);
        return m;
    }

    void expect_drained(const std::map<std::string, FieldMatrix>& pool) {
        if (!pool.empty())
            throw ParseError("unexpected matrix '" + pool.begin()->first + "'",
                             lines_.empty() ? 1 : lines_[cursor_ ? cursor_ - 1 : 0].number);
    }

    SymmetricSeed assemble_seed(const CodeParameters& params, const FieldPtr& field,
                                std::map<std::string, FieldMatrix>& pool) {
        SymmetricSeed seed;
        seed.params = params;
        seed.field = field;
        seed.base = take(pool, "A");
        seed.rotation = take(pool, "R");
        for (int t = 1; t < params.n; ++t) seed.b.push_back(take(pool, "B" + std::to_string(t)));
        expect_drained(pool);
        try {
            seed.validate();
        } catch (const Error& e) {
            throw ParseError(e.what(), lines_[cursor_ ? cursor_ - 1 : 0].number);
        }
        return seed;
    }

    RegeneratingCode assemble_explicit(const CodeParameters& params, const FieldPtr& field,
                                       std::map<std::string, FieldMatrix>& pool) {
        RegeneratingCode code;
        code.params = params;
        code.field = field;
        for (int i = 1; i <= params.n; ++i)
            code.storage.push_back(take(pool, "A" + std::to_string(i)));
        code.transmissions.assign(static_cast<std::size_t>(params.n) * params.n,
                                  FieldMatrix(field, 1, params.alpha()));
        for (int i = 1; i <= params.n; ++i)
            for (int j = 1; j <= params.n; ++j) {
                if (i == j) continue;
                code.transmission(i - 1, j - 1) =
                    take(pool, "B" + std::to_string(i) + "_" + std::to_string(j));
            }
        expect_drained(pool);
        try {
            code.validate();
        } catch (const Error& e) {
            throw ParseError(e.what(), lines_[cursor_ ? cursor_ - 1 : 0].number);
        }
        return code;
    }
};

void write_field_line(std::ostream& out, const FieldPtr& field) {
    out << "field " << field->characteristic() << ' ' << field->degree();
    if (field->degree() > 1)
        for (int c : field->modulus()) out << ' ' << c;
    out << '\n';
}

void write_matrix(std::ostream& out, const std::string& name, const FieldMatrix& m) {
    out << "matrix " << name << ' ' << m.rows() << ' ' << m.cols() << '\n';
    out << to_string(m);
}

}  // namespace

std::vector<CodeDocument> parse_code_documents(std::istream& in) {
    const auto lines = tokenize(in);
    std::vector<CodeDocument> docs;
    std::size_t cursor = 0;
    while (cursor < lines.size()) {
        DocParser parser(lines, cursor);
        docs.push_back(parser.parse());
    }
    if (docs.empty()) throw ParseError("no code document found", 1);
    return docs;
}

std::vector<CodeDocument> parse_code_documents(const std::string& text) {
    std::istringstream in(text);
    return parse_code_documents(in);
}

void write_code(std::ostream& out, const SymmetricSeed& seed) {
    out << "msrcode 1\n";
    write_field_line(out, seed.field);
    out << "params " << seed.params.n << ' ' << seed.params.k << '\n';
    out << "form symmetric\n";
    const int fixed = seed.params.total_cols() - seed.params.n;
    out << "# rotation: " << seed.params.n << "-cycle";
    if (fixed > 0) out << " + " << fixed << " fixed point" << (fixed == 1 ? "" : "s");
    out << '\n';
    write_matrix(out, "A", seed.base);
    write_matrix(out, "R", seed.rotation);
    for (int t = 1; t < seed.params.n; ++t)
        write_matrix(out, "B" + std::to_string(t), seed.b[static_cast<std::size_t>(t - 1)]);
}

void write_code(std::ostream& out, const RegeneratingCode& code) {
    out << "msrcode 1\n";
    write_field_line(out, code.field);
    out << "params " << code.params.n << ' ' << code.params.k << '\n';
    out << "form explicit\n";
    for (int i = 1; i <= code.params.n; ++i)
        write_matrix(out, "A" + std::to_string(i), code.storage[static_cast<std::size_t>(i - 1)]);
    for (int i = 1; i <= code.params.n; ++i)
        for (int j = 1; j <= code.params.n; ++j) {
            if (i == j) continue;
            write_matrix(out, "B" + std::to_string(i) + "_" + std::to_string(j),
                         code.transmission(i - 1, j - 1));
        }
}

void write_code(std::ostream& out, const CodeDocument& doc) {
    if (doc.is_symmetric())
        write_code(out, doc.seed());
    else
        write_code(out, doc.code());
}

std::string to_text(const SymmetricSeed& seed) {
    std::ostringstream os;
    write_code(os, seed);
    return os.str();
}

std::string to_text(const RegeneratingCode& code) {
    std::ostringstream os;
    write_code(os, code);
    return os.str();
}

std::string render_report(const SearchReport& report, bool include_codes) {
    std::ostringstream os;
    os << "n=" << report.params.n << '\n';
    os << "k=" << report.params.k << '\n';
    os << "p=" << report.field->characteristic() << '\n';
    os << "m=" << report.field->degree() << '\n';
    os << "field=" << report.field->name() << '\n';
    os << "mode=" << (report.mode == SearchMode::exhaustive ? "exhaustive" : "random") << '\n';
    if (report.mode == SearchMode::random) os << "seed=" << report.rng_seed << '\n';
    os << "a_candidates=" << report.a_candidates << '\n';
    os << "a_independent=" << report.a_independent << '\n';
    os << "a_recoverable=" << report.a_recoverable << '\n';
    os << "y_candidates=" << report.y_candidates << '\n';
    os << "y_nullity_aborts=" << report.y_nullity_aborts << '\n';
    os << "codes_found=" << report.codes_found << '\n';
    os << "emitted=" << report.emitted.size() << '\n';
    os << "independence_fraction=" << report.independence_fraction().str() << '\n';
    os << "recovery_fraction=" << report.recovery_fraction().str() << '\n';
    os << "elapsed_seconds=" << report.elapsed_seconds << '\n';
    if (include_codes)
        for (const auto& seed : report.emitted) {
            os << "code:\n";
            write_code(os, seed);
        }
    return os.str();
}

}  // namespace msr
