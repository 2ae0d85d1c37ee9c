#pragma once

#include <spoke/burnside.hpp>
#include <spoke/ktheory.hpp>
#include <spoke/mahowald.hpp>

#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace spoke {

// Field order is part of the output format, so documents are reproducible.
using Json = nlohmann::ordered_json;

namespace detail {

// Every integer is rendered as a decimal string; values exceed 64 bits
// routinely, and string form round-trips exactly.
inline Json bigints_to_json(const std::vector<BigInt>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(x.get_str());
    return a;
}

inline BigInt bigint_from_json(const Json& j) {
    if (j.is_number_integer()) return BigInt(std::to_string(j.get<long long>()), 10);
    require(j.is_string(), ErrorKind::ParseError, "expected an integer or a decimal string");
    return parse_bigint(j.get<std::string>());
}

inline std::vector<BigInt> bigints_from_json(const Json& j) {
    require(j.is_array(), ErrorKind::ParseError, "expected an array of integers");
    std::vector<BigInt> v;
    v.reserve(j.size());
    for (const auto& e : j) v.push_back(bigint_from_json(e));
    return v;
}

inline unsigned long ulong_field(const Json& j, const char* key) {
    require(j.contains(key), ErrorKind::ParseError, std::string("missing field: ") + key);
    const Json& f = j.at(key);
    require(f.is_number_unsigned() || (f.is_number_integer() && f.get<long long>() >= 0),
            ErrorKind::ParseError, std::string("field must be a nonnegative integer: ") + key);
    return f.get<unsigned long>();
}

inline long long_field(const Json& j, const char* key) {
    require(j.contains(key), ErrorKind::ParseError, std::string("missing field: ") + key);
    const Json& f = j.at(key);
    require(f.is_number_integer(), ErrorKind::ParseError,
            std::string("field must be an integer: ") + key);
    return f.get<long>();
}

inline Json parse_json_text(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    require(!j.is_discarded(), ErrorKind::ParseError, "malformed JSON document");
    return j;
}

}  // namespace detail

inline Json to_json(const RUElement& x) {
    return Json{{"p", x.group.p}, {"n", x.group.n}, {"coeffs", detail::bigints_to_json(x.coeffs)}};
}

inline RUElement ru_from_json(const Json& j) {
    GroupSpec g(detail::ulong_field(j, "p"), detail::ulong_field(j, "n"));
    std::vector<BigInt> coeffs = detail::bigints_from_json(j.at("coeffs"));
    require(coeffs.size() == g.order(), ErrorKind::ParseError,
            "coefficient count must equal the group order");
    return RUElement(g, std::move(coeffs));
}

inline Json to_json(const BurnsideElement& x) {
    return Json{{"p", x.group.p},
                {"m", x.group.n},
                {"basis", "t"},
                {"coeffs", detail::bigints_to_json(x.t_coeffs)}};
}

inline BurnsideElement burnside_from_json(const Json& j) {
    GroupSpec g(detail::ulong_field(j, "p"), detail::ulong_field(j, "m"));
    std::string basis = j.contains("basis") ? j.at("basis").get<std::string>() : "t";
    std::vector<BigInt> coeffs = detail::bigints_from_json(j.at("coeffs"));
    require(coeffs.size() == g.n + 1, ErrorKind::ParseError,
            "coefficient count must be m + 1");
    if (basis == "t") return BurnsideElement(g, std::move(coeffs));
    if (basis == "z") return burnside_from_z_coeffs(g, coeffs);
    if (basis == "marks") return from_marks(g, coeffs);
    fail(ErrorKind::ParseError, "unknown basis: " + basis);
}

inline Json to_json(const GradedKUClass& x) {
    return Json{{"p", x.group.p},
                {"n", x.group.n},
                {"degree", x.degree},
                {"payload", detail::bigints_to_json(x.payload.coeffs)}};
}

inline GradedKUClass graded_from_json(const Json& j) {
    GroupSpec g(detail::ulong_field(j, "p"), detail::ulong_field(j, "n"));
    std::vector<BigInt> coeffs = detail::bigints_from_json(j.at("payload"));
    require(coeffs.size() == g.order(), ErrorKind::ParseError,
            "payload length must equal the group order");
    return GradedKUClass(g, detail::long_field(j, "degree"), RUElement(g, std::move(coeffs)));
}

inline Json to_json(const FixedLattice& f) {
    Json rows = Json::array();
    const IntMatrix& b = f.lattice.basis();
    for (std::size_t r = 0; r < b.nrows; ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < b.ncols; ++c) row.push_back(b.e[r][c].get_str());
        rows.push_back(std::move(row));
    }
    Json j{{"p", f.group.p},
           {"n", f.group.n},
           {"degree", f.degree},
           {"provenance", provenance_name(f.provenance)},
           {"basis", std::move(rows)}};
    if (f.stabilized) j["stabilized"] = *f.stabilized;
    return j;
}

inline Json to_json(const QuotientStructure& q) {
    return Json{{"p", q.group.p},
                {"n", q.group.n},
                {"degree", q.degree},
                {"divisors", detail::bigints_to_json(q.divisors)},
                {"generator_images", detail::bigints_to_json(q.generator_images)}};
}

inline Json to_json(const JImageElement& e) {
    Json j{{"stem", e.stem}, {"family", e.family}};
    if (e.family != "eta" && e.family != "eta_squared") j["l"] = e.l;
    if (e.family == "j_generator") j["c"] = e.c;
    j["raw"] = e.raw.get_str();
    j["coefficient"] = e.coefficient.get_str();
    j["modulus"] = e.modulus.get_str();
    j["indeterminacy"] = e.indeterminacy;
    return j;
}

inline Json to_json(const MahowaldResult& r) {
    Json j{{"input", to_json(r.input)}, {"degree", r.degree}};
    j["coefficients"] = detail::bigints_to_json(r.coefficients);
    if (r.j) j["j"] = to_json(*r.j);
    if (r.residue) j["residue"] = r.residue->get_str();
    j["display"] = r.display;
    return j;
}

namespace detail {

inline std::string trimmed(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

inline bool looks_like_integer(const std::string& s) {
    if (s.empty()) return false;
    std::size_t start = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (start == s.size()) return false;
    for (std::size_t i = start; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

}  // namespace detail

// Accepted element forms: "t:[...]", "z:[...]", "marks:[...]", a bare integer
// (level-0 elements only), an inline JSON object, "-" for stdin, or a path to
// a file holding any of the above.
inline BurnsideElement parse_element(const std::string& raw, const GroupSpec& g,
                                     bool allow_indirect = true) {
    const std::string text = detail::trimmed(raw);
    require(!text.empty(), ErrorKind::ParseError, "empty element");

    if (text == "-") {
        require(allow_indirect, ErrorKind::ParseError, "stdin reference inside indirect input");
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return parse_element(buf.str(), g, false);
    }

    auto coeff_list = [&](const std::string& body) {
        return detail::bigints_from_json(detail::parse_json_text(body));
    };
    auto check_len = [&](const std::vector<BigInt>& v) {
        require(v.size() == g.n + 1, ErrorKind::ParseError,
                "expected " + std::to_string(g.n + 1) + " coefficients for level " +
                    std::to_string(g.n));
    };

    if (text.rfind("t:", 0) == 0) {
        std::vector<BigInt> v = coeff_list(text.substr(2));
        check_len(v);
        return BurnsideElement(g, std::move(v));
    }
    if (text.rfind("z:", 0) == 0) {
        std::vector<BigInt> v = coeff_list(text.substr(2));
        check_len(v);
        return burnside_from_z_coeffs(g, v);
    }
    if (text.rfind("marks:", 0) == 0) {
        std::vector<BigInt> v = coeff_list(text.substr(6));
        check_len(v);
        return from_marks(g, v);
    }
    if (detail::looks_like_integer(text)) {
        require(g.n == 0, ErrorKind::ParseError,
                "a bare integer only denotes a level-0 element; use t:[...] at level " +
                    std::to_string(g.n));
        return BurnsideElement(g, {parse_bigint(text)});
    }
    if (text[0] == '{') {
        BurnsideElement x = burnside_from_json(detail::parse_json_text(text));
        require(x.group == g, ErrorKind::ParseError, "element level disagrees with --p/--n");
        return x;
    }
    if (allow_indirect) {
        std::ifstream in(text);
        if (in) {
            std::ostringstream buf;
            buf << in.rdbuf();
            return parse_element(buf.str(), g, false);
        }
    }
    fail(ErrorKind::ParseError, "unrecognized element syntax: " + text);
}

}  // namespace spoke
