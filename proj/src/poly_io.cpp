#include "phiirred/poly_io.hpp"

#include <cctype>
#include <stdexcept>

namespace phiirred {

std::string to_string(const IntPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    const auto& c = f.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        Integer mag = abs(c[i]);
        const bool negative = c[i] < 0;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (i == 0 || mag != 1) out += mag.get_str();
        if (i >= 1) out += "x";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

namespace {

class InlineParser {
public:
    explicit InlineParser(std::string_view s) : s_(s) {}

    IntPoly parse() {
        IntPoly acc;
        skip_ws();
        bool first = true;
        while (true) {
            skip_ws();
            if (pos_ >= s_.size()) break;
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_ws();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            acc += parse_term(sign);
            first = false;
        }
        if (first) fail("empty polynomial");
        return acc;
    }

private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("polynomial parse error at position " + std::to_string(pos_) + ": " + what +
                                    " in \"" + std::string(s_) + "\"");
    }

    std::string digits() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }

    IntPoly parse_term(int sign) {
        Integer coeff = 1;
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = Integer(digits());
            have_coeff = true;
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                skip_ws();
                if (peek() != 'x') fail("expected 'x' after '*'");
            }
        }
        std::size_t power = 0;
        if (peek() == 'x') {
            ++pos_;
            power = 1;
            skip_ws();
            if (peek() == '^') {
                ++pos_;
                skip_ws();
                std::string e = digits();
                if (e.empty()) fail("expected exponent");
                power = std::stoul(e);
            }
        } else if (!have_coeff) {
            fail("expected integer or 'x'");
        }
        return IntPoly::monomial(sign * coeff, power);
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

IntPoly parse_inline(std::string_view text) { return InlineParser(text).parse(); }

Integer parse_integer(std::string_view text) {
    std::string s(text);
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("not a decimal integer: \"" + s + "\"");
    for (std::size_t i = start; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw std::invalid_argument("not a decimal integer: \"" + s + "\"");
    if (s[0] == '+') s.erase(0, 1);
    return Integer(s, 10);
}

Integer integer_from_json(const nlohmann::json& j) {
    if (j.is_string()) return parse_integer(j.get<std::string>());
    if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long long>()));
    throw std::invalid_argument("expected an integer (decimal string), got " + j.dump());
}

nlohmann::json to_json_literal(const IntPoly& f) {
    auto arr = nlohmann::json::array();
    for (const auto& c : f.coeffs()) arr.push_back(c.get_str());
    return arr;
}

IntPoly from_json_literal(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial literal must be a JSON array, got " + j.dump());
    std::vector<Integer> coeffs;
    coeffs.reserve(j.size());
    for (const auto& e : j) coeffs.push_back(integer_from_json(e));
    return IntPoly(std::move(coeffs));
}

}  // namespace phiirred
