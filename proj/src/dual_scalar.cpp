#include "dugg/dual_scalar.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <system_error>

namespace dugg {

std::string_view ring_name(Ring r) {
    switch (r) {
        case Ring::real: return "real";
        case Ring::complex: return "complex";
        case Ring::quaternion: return "quaternion";
    }
    return "?";
}

Ring parse_ring(std::string_view name) {
    if (name == "real") return Ring::real;
    if (name == "complex") return Ring::complex;
    if (name == "quaternion") return Ring::quaternion;
    throw BadRing(std::string(name));
}

namespace {

template <BaseRing From, BaseRing To>
To widen_base(const From& v) {
    if constexpr (std::is_same_v<From, To>) {
        return v;
    } else if constexpr (std::is_same_v<From, double>) {
        return ring_traits<To>::from_real(v);
    } else {
        static_assert(std::is_same_v<From, Complex> && std::is_same_v<To, Quaternion>);
        return Quaternion(v);
    }
}

template <BaseRing T>
DualScalar widen_to(const DualScalar& a) {
    return std::visit(
        [&](const auto& v) -> DualScalar {
            using From = std::decay_t<decltype(v.s)>;
            if constexpr (ring_of<From> > ring_of<T>) {
                throw RingMismatch();
            } else {
                return Dual<T>{widen_base<From, T>(v.s), widen_base<From, T>(v.d)};
            }
        },
        a.storage());
}

template <class Op>
DualScalar binary(const DualScalar& a, const DualScalar& b, Op op) {
    if (a.ring() != b.ring()) throw RingMismatch();
    return std::visit(
        [&](const auto& x) -> DualScalar {
            using D = std::decay_t<decltype(x)>;
            return op(x, std::get<D>(b.storage()));
        },
        a.storage());
}

}  // namespace

DualScalar DualScalar::widen(Ring target) const {
    switch (target) {
        case Ring::real: return widen_to<double>(*this);
        case Ring::complex: return widen_to<Complex>(*this);
        case Ring::quaternion: return widen_to<Quaternion>(*this);
    }
    throw RingMismatch();
}

DualScalar operator+(const DualScalar& a, const DualScalar& b) {
    return binary(a, b, [](const auto& x, const auto& y) { return x + y; });
}
DualScalar operator-(const DualScalar& a, const DualScalar& b) {
    return binary(a, b, [](const auto& x, const auto& y) { return x - y; });
}
DualScalar operator*(const DualScalar& a, const DualScalar& b) {
    return binary(a, b, [](const auto& x, const auto& y) { return x * y; });
}
DualScalar conj(const DualScalar& a) {
    return std::visit([](const auto& x) -> DualScalar { return conj(x); }, a.storage());
}
DualScalar inverse(const DualScalar& a, double tol) {
    return std::visit([tol](const auto& x) -> DualScalar { return inverse(x, tol); }, a.storage());
}
DualNumber magnitude(const DualScalar& a, double tol) {
    return std::visit([tol](const auto& x) { return magnitude(x, tol); }, a.storage());
}
DualNumber real_part(const DualScalar& a) {
    return std::visit([](const auto& x) { return real_part(x); }, a.storage());
}
bool is_unit(const DualScalar& a, double tol) {
    return std::visit([tol](const auto& x) { return is_unit(x, tol); }, a.storage());
}

std::string format_real(double v) {
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    if (ec != std::errc()) return "nan";
    return std::string(buf.data(), ptr);
}

namespace {

void append_term(std::string& out, double v, char unit) {
    std::string text = format_real(v);
    if (text.front() != '-') out += '+';
    out += text;
    out += unit;
}

}  // namespace

template <>
std::string format_base<double>(const double& v) {
    return format_real(v);
}

template <>
std::string format_base<Complex>(const Complex& v) {
    std::string out = "(" + format_real(v.real());
    append_term(out, v.imag(), 'i');
    return out + ")";
}

template <>
std::string format_base<Quaternion>(const Quaternion& v) {
    std::string out = "(" + format_real(v.w);
    append_term(out, v.x, 'i');
    append_term(out, v.y, 'j');
    append_term(out, v.z, 'k');
    return out + ")";
}

std::string to_string(const DualScalar& a) {
    return std::visit(
        [](const auto& x) {
            using T = std::decay_t<decltype(x.s)>;
            return format_base<T>(x.s) + " + " + format_base<T>(x.d) + "*eps";
        },
        a.storage());
}

namespace {

class ScalarParser {
public:
    explicit ScalarParser(std::string_view text) : text_(text) {}

    DualScalar parse() {
        Quaternion s = parse_base();
        Quaternion d{};
        skip_ws();
        if (at_end()) return finish(s, d);
        if (try_eps()) return finish(Quaternion{}, s);
        char sign = peek();
        if (sign != '+' && sign != '-') fail("expected '+' or '-' before dual part");
        ++pos_;
        skip_ws();
        d = parse_base();
        if (sign == '-') d = -d;
        skip_ws();
        if (!try_eps()) fail("expected '*eps' after dual part");
        skip_ws();
        if (!at_end()) fail("trailing characters");
        return finish(s, d);
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw BadParameter("cannot parse dual scalar '" + std::string(text_) + "': " + what);
    }

    bool try_eps() {
        std::size_t save = pos_;
        skip_ws();
        if (peek() == '*') {
            ++pos_;
            skip_ws();
        }
        if (text_.substr(pos_, 3) == "eps") {
            pos_ += 3;
            return true;
        }
        pos_ = save;
        return false;
    }

    double parse_number() {
        double v = 0.0;
        const char* begin = text_.data() + pos_;
        auto [ptr, ec] = std::from_chars(begin, text_.data() + text_.size(), v);
        if (ec != std::errc()) fail("expected a number");
        pos_ += static_cast<std::size_t>(ptr - begin);
        return v;
    }

    // One signed term of a parenthesised base value, e.g. "-2.5j" or "+k".
    void parse_term(Quaternion& acc, bool first) {
        skip_ws();
        double sign = 1.0;
        if (peek() == '+' || peek() == '-') {
            sign = peek() == '-' ? -1.0 : 1.0;
            ++pos_;
            skip_ws();
        } else if (!first) {
            fail("expected '+' or '-' between components");
        }
        double mag = 1.0;
        char c = peek();
        if (c != 'i' && c != 'j' && c != 'k') mag = parse_number();
        double v = sign * mag;
        switch (peek()) {
            case 'i': ++pos_; acc.x += v; used_ = std::max(used_, Ring::complex); break;
            case 'j': ++pos_; acc.y += v; used_ = Ring::quaternion; break;
            case 'k': ++pos_; acc.z += v; used_ = Ring::quaternion; break;
            default: acc.w += v; break;
        }
    }

    Quaternion parse_base() {
        skip_ws();
        Quaternion q{};
        if (peek() == '(') {
            ++pos_;
            bool first = true;
            while (true) {
                skip_ws();
                if (peek() == ')') {
                    ++pos_;
                    break;
                }
                if (at_end()) fail("missing ')'");
                parse_term(q, first);
                first = false;
            }
            if (first) fail("empty parentheses");
            return q;
        }
        // A bare real, possibly negative.
        q.w = parse_number();
        return q;
    }

    DualScalar finish(const Quaternion& s, const Quaternion& d) const {
        switch (used_) {
            case Ring::real: return DualNumber{s.w, d.w};
            case Ring::complex: return DualComplex{{s.w, s.x}, {d.w, d.x}};
            case Ring::quaternion: return DualQuaternion{s, d};
        }
        return {};
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    Ring used_ = Ring::real;
};

}  // namespace

DualScalar parse_dual_scalar(std::string_view text, std::optional<Ring> ring) {
    DualScalar v = ScalarParser(text).parse();
    if (!ring) return v;
    if (v.ring() > *ring) {
        throw BadParameter("value '" + std::string(text) + "' does not fit the " +
                           std::string(ring_name(*ring)) + " ring");
    }
    return v.widen(*ring);
}

}  // namespace dugg
