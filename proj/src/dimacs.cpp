#include "posat/dimacs.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace posat {

namespace {

struct Tokenizer {
    std::istream& in;
    int line = 1;

    // Skips whitespace, counting newlines. Returns false at end of input.
    bool skip_ws() {
        int c;
        while ((c = in.peek()) != EOF) {
            if (c == '\n') line++;
            if (!std::isspace(c)) return true;
            in.get();
        }
        return false;
    }

    // Reads one whitespace-delimited token.
    std::string next() {
        std::string tok;
        int c;
        while ((c = in.peek()) != EOF && !std::isspace(c)) tok.push_back(static_cast<char>(in.get()));
        return tok;
    }

    void skip_line() {
        int c;
        while ((c = in.get()) != EOF)
            if (c == '\n') { line++; break; }
    }
};

long long parse_int(const std::string& tok, int line) {
    if (tok.empty()) throw ParseError(line, "empty token");
    size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError(line, "expected integer, got '" + tok + "'");
    }
    if (pos != tok.size()) throw ParseError(line, "expected integer, got '" + tok + "'");
    return v;
}

}  // namespace

RawFormula parse_cnf(std::istream& in, std::vector<std::string>* warnings) {
    Tokenizer t{in};
    RawFormula f;
    long long declared_clauses = -1;
    bool have_header = false;

    // Header: comments may precede 'p cnf V C'.
    while (t.skip_ws()) {
        int c = in.peek();
        if (c == 'c') { t.skip_line(); continue; }
        if (c == '%') { t.skip_line(); continue; }
        if (c != 'p') throw ParseError(t.line, "expected 'p cnf' header before clauses");
        int header_line = t.line;
        std::string p = t.next();
        if (p != "p" || !t.skip_ws()) throw ParseError(header_line, "malformed header");
        std::string fmt = t.next();
        if (fmt != "cnf" || !t.skip_ws()) throw ParseError(header_line, "malformed header: format must be 'cnf'");
        long long nv = parse_int(t.next(), t.line);
        if (!t.skip_ws()) throw ParseError(t.line, "malformed header: missing clause count");
        declared_clauses = parse_int(t.next(), t.line);
        if (nv < 0 || declared_clauses < 0 || nv > (1LL << 28))
            throw ParseError(header_line, "malformed header: counts out of range");
        f.num_vars = static_cast<int>(nv);
        have_header = true;
        break;
    }
    if (!have_header) throw ParseError(t.line, "missing 'p cnf' header");

    std::vector<Lit> clause;
    bool open_clause = false;
    while (t.skip_ws()) {
        int c = in.peek();
        if (c == 'c') { t.skip_line(); continue; }
        if (c == '%') break;  // common end-of-file marker in benchmark sets
        int tok_line = t.line;
        long long v = parse_int(t.next(), tok_line);
        if (v == 0) {
            f.clauses.push_back(clause);
            clause.clear();
            open_clause = false;
            continue;
        }
        long long av = v > 0 ? v : -v;
        if (av > f.num_vars)
            throw ParseError(tok_line, "literal " + std::to_string(v) + " exceeds declared " +
                                           std::to_string(f.num_vars) + " variables");
        clause.push_back(lit_from_dimacs(v));
        open_clause = true;
    }
    if (open_clause) throw ParseError(t.line, "missing terminating 0 at end of file");

    if (declared_clauses != static_cast<long long>(f.clauses.size()) && warnings)
        warnings->push_back("header declares " + std::to_string(declared_clauses) + " clauses but " +
                            std::to_string(f.clauses.size()) + " were read");
    return f;
}

RawFormula parse_cnf_file(const std::string& path, std::vector<std::string>* warnings) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return parse_cnf(in, warnings);
}

void write_cnf(std::ostream& out, const RawFormula& f) {
    out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
    for (const auto& cl : f.clauses) {
        for (Lit l : cl) out << lit_to_dimacs(l) << ' ';
        out << "0\n";
    }
}

bool verify_model(const RawFormula& f, const std::vector<Value>& model) {
    if (static_cast<int>(model.size()) < f.num_vars)
        throw std::invalid_argument("model does not cover every variable");
    for (int v = 0; v < f.num_vars; v++)
        if (model[v] == Value::Unassigned) throw std::invalid_argument("model leaves variable unassigned");
    for (const auto& cl : f.clauses) {
        bool sat = false;
        for (Lit l : cl)
            if (lit_value(model[l.var()], l) == Value::True) { sat = true; break; }
        if (!sat) return false;
    }
    return true;
}

std::string write_result(const Verdict& v) {
    switch (v.kind) {
        case Verdict::Kind::Unsat: return "s UNSATISFIABLE\n";
        case Verdict::Kind::Unknown: return "s UNKNOWN\n";
        case Verdict::Kind::Sat: break;
    }
    std::string out = "s SATISFIABLE\n";
    constexpr size_t max_line = 4096;
    std::string line = "v";
    auto flush = [&] { out += line; out += '\n'; line = "v"; };
    for (size_t i = 0; i < v.model.size(); i++) {
        Lit l(static_cast<Var>(i), v.model[i] == Value::False);
        std::string tok = std::to_string(lit_to_dimacs(l));
        if (line.size() + 1 + tok.size() > max_line) flush();
        line += ' ';
        line += tok;
    }
    if (line.size() + 2 > max_line) flush();
    line += " 0";
    flush();
    return out;
}

int exit_code_for(const Verdict& v) {
    switch (v.kind) {
        case Verdict::Kind::Sat: return 10;
        case Verdict::Kind::Unsat: return 20;
        default: return 0;
    }
}

}  // namespace posat
