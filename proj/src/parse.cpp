#include "latsum/parse.hpp"

#include <cctype>

namespace latsum {

namespace {

class Parser {
public:
    Parser(const std::string& text, const std::vector<std::string>& vars,
           const Fq& field, std::size_t torus_vars)
        : s_(text), vars_(vars), f_(field), torus_(torus_vars) {}

    Laurent run() {
        Laurent out(vars_.size());
        bool negative = false;
        skip_ws();
        if (peek() == '-') { negative = true; ++pos_; }
        else if (peek() == '+') ++pos_;
        while (true) {
            parse_term(out, negative);
            skip_ws();
            if (pos_ == s_.size()) break;
            char c = peek();
            if (c == '+') negative = false;
            else if (c == '-') negative = true;
            else throw ParseError("expected '+' or '-'", pos_);
            ++pos_;
        }
        return out;
    }

private:
    const std::string& s_;
    const std::vector<std::string>& vars_;
    const Fq& f_;
    std::size_t torus_;
    std::size_t pos_ = 0;

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    long long parse_int() {
        skip_ws();
        std::size_t start = pos_;
        bool neg = false;
        if (peek() == '-') { neg = true; ++pos_; }
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected integer", pos_);
        long long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > (1LL << 40)) throw ParseError("integer too large", start);
            ++pos_;
        }
        return neg ? -v : v;
    }

    // matches the longest variable name at the cursor
    long match_var() {
        long best = -1;
        std::size_t best_len = 0;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            const auto& v = vars_[i];
            if (v.size() > best_len && s_.compare(pos_, v.size(), v) == 0) {
                best = static_cast<long>(i);
                best_len = v.size();
            }
        }
        if (best >= 0) pos_ += best_len;
        return best;
    }

    // g, g^k, or an integer combination like g^2 + 3*g + 1 (inside parens)
    FqElem parse_gen_atom() {
        ++pos_;  // 'g'
        long long e = 1;
        if (peek() == '^') { ++pos_; e = parse_int(); }
        if (e < 0) throw ParseError("negative generator power", pos_);
        return f_.pow(f_.gen(), Int(e));
    }

    FqElem parse_coeff_sum() {
        FqElem acc = f_.zero();
        bool neg = false;
        skip_ws();
        if (peek() == '-') { neg = true; ++pos_; }
        while (true) {
            skip_ws();
            FqElem term;
            if (peek() == 'g' && !is_var_here()) {
                term = parse_gen_atom();
            } else {
                term = f_.from_int(parse_int());
                skip_ws();
                if (peek() == '*') {
                    std::size_t save = pos_;
                    ++pos_;
                    skip_ws();
                    if (peek() == 'g' && !is_var_here())
                        term = f_.mul(term, parse_gen_atom());
                    else
                        pos_ = save;
                }
            }
            acc = neg ? f_.sub(acc, term) : f_.add(acc, term);
            skip_ws();
            if (peek() == '+') { neg = false; ++pos_; }
            else if (peek() == '-') { neg = true; ++pos_; }
            else break;
        }
        return acc;
    }

    bool is_var_here() {
        std::size_t save = pos_;
        long v = match_var();
        pos_ = save;
        return v >= 0;
    }

    void parse_term(Laurent& out, bool negative) {
        FqElem coeff = f_.one();
        Expo e(vars_.size(), 0);
        bool saw_factor = false;
        while (true) {
            skip_ws();
            std::size_t fac_pos = pos_;
            long vi = match_var();
            if (vi >= 0) {
                long long ex = 1;
                if (peek() == '^') { ++pos_; ex = parse_int(); }
                if (ex < 0 && static_cast<std::size_t>(vi) >= torus_)
                    throw ParseError("negative exponent on affine variable",
                                     fac_pos);
                e[vi] += ex;
            } else if (peek() == 'g') {
                coeff = f_.mul(coeff, parse_gen_atom());
            } else if (peek() == '(') {
                ++pos_;
                coeff = f_.mul(coeff, parse_coeff_sum());
                skip_ws();
                if (peek() != ')') throw ParseError("expected ')'", pos_);
                ++pos_;
            } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
                coeff = f_.mul(coeff, f_.from_int(parse_int()));
            } else {
                throw ParseError("expected a term", pos_);
            }
            saw_factor = true;
            skip_ws();
            if (peek() == '*') { ++pos_; continue; }
            break;
        }
        if (!saw_factor) throw ParseError("expected a term", pos_);
        if (negative) coeff = f_.neg(coeff);
        out.add_term(f_, e, coeff);
    }
};

std::string coeff_to_string(const FqElem& c, const Fq& f) {
    // rational element: only the constant coordinate may be nonzero
    bool rational = true;
    for (std::size_t i = 1; i < c.size(); ++i)
        if (c[i] != 0) rational = false;
    if (rational) return std::to_string(c.empty() ? 0 : c[0]);
    std::string s = "(";
    bool first = true;
    for (std::size_t i = c.size(); i > 0; --i) {
        int v = c[i - 1];
        if (v == 0) continue;
        if (!first) s += "+";
        first = false;
        if (i == 1) { s += std::to_string(v); continue; }
        if (v != 1) s += std::to_string(v) + "*";
        s += "g";
        if (i > 2) s += "^" + std::to_string(i - 1);
    }
    return s + ")";
}

} // namespace

Laurent parse_poly(const std::string& text,
                   const std::vector<std::string>& varnames, const Fq& field,
                   std::size_t torus_vars) {
    return Parser(text, varnames, field, torus_vars).run();
}

std::string print_poly(const Laurent& f, const std::vector<std::string>& varnames,
                       const Fq& field) {
    if (f.terms.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : f.terms) {
        if (!s.empty()) s += " + ";
        std::string mono;
        for (std::size_t i = 0; i < varnames.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += varnames[i];
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        std::string cs = coeff_to_string(c, field);
        if (mono.empty()) s += cs;
        else if (cs == "1") s += mono;
        else s += cs + "*" + mono;
    }
    return s;
}

} // namespace latsum
