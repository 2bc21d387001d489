#include "deltarig/bipoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace deltarig {

BiPoly BiPoly::constant(Int c) {
    BiPoly p;
    p.add_term(0, 0, c);
    return p;
}

BiPoly BiPoly::monomial(Int c, int i, int j) {
    BiPoly p;
    p.add_term(i, j, c);
    return p;
}

bool BiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == std::pair<int, int>{0, 0});
}

int BiPoly::deg_x() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.first);
    return d;
}

int BiPoly::deg_y() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.second);
    return d;
}

int BiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    const auto& e = terms_.rbegin()->first;
    return e.first + e.second;
}

Int BiPoly::coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Int(0) : it->second;
}

Int BiPoly::leading_coeff() const {
    return terms_.empty() ? Int(0) : terms_.rbegin()->second;
}

Int BiPoly::content() const {
    Int g = 0;
    for (const auto& [e, c] : terms_) {
        g = boost::multiprecision::gcd(g, c);
        if (g == 1) break;
    }
    return g < 0 ? Int(-g) : g;
}

Int BiPoly::eval(const Int& x0, const Int& y0) const {
    Int total = 0;
    for (const auto& [e, c] : terms_) {
        Int t = c;
        for (int k = 0; k < e.first; ++k) t *= x0;
        for (int k = 0; k < e.second; ++k) t *= y0;
        total += t;
    }
    return total;
}

void BiPoly::add_term(int i, int j, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(std::pair<int, int>{i, j}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    return r;
}

BiPoly operator*(const Int& c, BiPoly p) {
    if (c == 0) return BiPoly{};
    for (auto& [e, coef] : p.terms_) coef *= c;
    return p;
}

BiPoly operator-(BiPoly p) {
    for (auto& [e, c] : p.terms_) c = -c;
    return p;
}

BiPoly BiPoly::pow(unsigned e) const {
    BiPoly result = BiPoly::constant(1);
    BiPoly base = *this;
    while (e > 0) {
        if (e & 1u) result = result * base;
        base = base * base;
        e >>= 1u;
    }
    return result;
}

bool BiPoly::divide_exact(const BiPoly& b, BiPoly& quotient) const {
    if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
    BiPoly rem = *this;
    BiPoly q;
    const auto& blead = *b.terms_.rbegin();
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms_.rbegin();
        const int di = rlead.first.first - blead.first.first;
        const int dj = rlead.first.second - blead.first.second;
        if (di < 0 || dj < 0) return false;
        if (rlead.second % blead.second != 0) return false;
        const Int qc = rlead.second / blead.second;
        q.add_term(di, dj, qc);
        rem -= BiPoly::monomial(qc, di, dj) * b;
    }
    quotient = std::move(q);
    return true;
}

bool BiPoly::operator<(const BiPoly& o) const {
    auto a = terms_.rbegin(), b = o.terms_.rbegin();
    for (; a != terms_.rend() && b != o.terms_.rend(); ++a, ++b) {
        if (a->first != b->first) return GrlexLess{}(a->first, b->first);
        if (a->second != b->second) return a->second < b->second;
    }
    return terms_.size() < o.terms_.size();
}

namespace {

void append_monomial(std::ostringstream& out, const Int& c, int i, int j, bool first) {
    Int a = c;
    if (first) {
        if (a < 0) {
            out << "-";
            a = -a;
        }
    } else {
        out << (a < 0 ? " - " : " + ");
        if (a < 0) a = -a;
    }
    const bool has_var = i > 0 || j > 0;
    if (a != 1 || !has_var) {
        out << a.str();
        if (has_var) out << "*";
    }
    if (i > 0) {
        out << "x";
        if (i > 1) out << "^" << i;
    }
    if (j > 0) {
        if (i > 0) out << "*";
        out << "y";
        if (j > 1) out << "^" << j;
    }
}

}  // namespace

std::string BiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        append_monomial(out, it->second, it->first.first, it->first.second, first);
        first = false;
    }
    return out.str();
}

namespace {

struct Lexer {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return s[pos];
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("polynomial parse error at position " + std::to_string(pos) + ": " + what);
    }
    Int read_integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected digits");
        return Int(s.substr(start, pos - start));
    }
    int read_exponent() {
        Int e = read_integer();
        if (e > 1000) fail("exponent too large");
        return static_cast<int>(e);
    }
};

}  // namespace

BiPoly BiPoly::parse(const std::string& s) {
    Lexer lx{s};
    BiPoly result;
    bool any = false;
    while (!lx.done()) {
        int sign = 1;
        // leading sign (mandatory between terms, optional on the first)
        char c = lx.peek();
        if (c == '+' || c == '-') {
            sign = (c == '-') ? -1 : 1;
            ++lx.pos;
        } else if (any) {
            lx.fail("expected '+' or '-' between terms");
        }
        if (lx.done()) lx.fail("dangling sign");

        Int coef = 1;
        int ei = 0, ej = 0;
        bool saw_factor = false;
        for (;;) {
            char p = lx.peek();
            if (std::isdigit(static_cast<unsigned char>(p))) {
                coef *= lx.read_integer();
                saw_factor = true;
            } else if (p == 'x' || p == 'y') {
                ++lx.pos;
                int e = 1;
                if (!lx.done() && lx.peek() == '^') {
                    ++lx.pos;
                    e = lx.read_exponent();
                }
                (p == 'x' ? ei : ej) += e;
                saw_factor = true;
            } else {
                lx.fail("expected coefficient or variable");
            }
            if (lx.done()) break;
            if (lx.peek() == '*') {
                ++lx.pos;
                continue;
            }
            break;
        }
        if (!saw_factor) lx.fail("empty term");
        result.add_term(ei, ej, sign * coef);
        any = true;
    }
    if (!any) throw std::invalid_argument("polynomial parse error: empty input");
    return result;
}

LaurentPoly LaurentPoly::constant(Int c) {
    LaurentPoly p;
    p.add_term(0, 0, c);
    return p;
}

void LaurentPoly::add_term(int du, int dv, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(std::pair<int, int>{du, dv}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Int LaurentPoly::coeff(int du, int dv) const {
    auto it = terms_.find({du, dv});
    return it == terms_.end() ? Int(0) : it->second;
}

namespace {
[[noreturn]] void laurent_empty() { throw std::logic_error("degree of zero Laurent polynomial"); }
}

int LaurentPoly::min_deg2_u() const {
    if (terms_.empty()) laurent_empty();
    int m = terms_.begin()->first.first;
    for (const auto& [e, c] : terms_) m = std::min(m, e.first);
    return m;
}

int LaurentPoly::max_deg2_u() const {
    if (terms_.empty()) laurent_empty();
    int m = terms_.begin()->first.first;
    for (const auto& [e, c] : terms_) m = std::max(m, e.first);
    return m;
}

int LaurentPoly::min_deg2_v() const {
    if (terms_.empty()) laurent_empty();
    int m = terms_.begin()->first.second;
    for (const auto& [e, c] : terms_) m = std::min(m, e.second);
    return m;
}

int LaurentPoly::max_deg2_v() const {
    if (terms_.empty()) laurent_empty();
    int m = terms_.begin()->first.second;
    for (const auto& [e, c] : terms_) m = std::max(m, e.second);
    return m;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
    return *this;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    auto emit_var = [&out](const char* name, int d2, bool lead) {
        if (d2 == 0) return lead;
        if (!lead) out << "*";
        out << name;
        if (d2 != 2) {
            if (d2 % 2 == 0)
                out << "^" << d2 / 2;
            else
                out << "^(" << d2 << "/2)";
        }
        return false;
    };
    for (const auto& [e, c] : terms_) {
        Int a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool lead = true;
        if (a != 1 || (e.first == 0 && e.second == 0)) {
            out << a.str();
            lead = false;
        }
        lead = emit_var("u", e.first, lead);
        emit_var("v", e.second, lead);
    }
    return out.str();
}

Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (int i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

LaurentPoly specialize_uv(const BiPoly& p, int sigma2, int w) {
    if (w < 0) throw std::invalid_argument("specialize_uv: width must be non-negative");
    LaurentPoly out;
    for (const auto& [e, c] : p.terms()) {
        const int i = e.first, j = e.second;
        // (u/v+1)^i (uv+1)^j expanded by binomials
        for (int k = 0; k <= i; ++k) {
            const Int bi = binomial(i, k);
            for (int l = 0; l <= j; ++l) {
                const Int coef = c * bi * binomial(j, l);
                out.add_term(2 * (k + l) - w, 2 * (l - k) + sigma2, coef);
            }
        }
    }
    return out;
}

}  // namespace deltarig
