#include "qhall/io.hpp"

#include <cctype>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <type_traits>

namespace qhall {

namespace {

[[noreturn]] void bad(const std::string& what, const std::string& got) {
    throw std::runtime_error("cannot parse " + what + ": '" + got + "'");
}

}  // namespace

Obj parseObj(const Params& p, const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) bad("object", text);

    static const std::regex xRe(R"(X\((-?\d+),(-?\d+),(-?\d+)\))");
    static const std::regex zRe(R"(Z\((-?\d+),(-?\d+)\))");

    Obj out;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t plus = s.find('+', pos);
        std::string part = s.substr(pos, plus == std::string::npos ? plus : plus - pos);
        std::smatch m;
        if (part == "0") {
            // zero summand contributes nothing
        } else if (std::regex_match(part, m, xRe)) {
            out = out.oplus(
                xObj(p, std::stoi(m[1]), std::stol(m[2]), std::stol(m[3])));
        } else if (std::regex_match(part, m, zRe)) {
            out = out.oplus(zObj(p, std::stoi(m[1]), std::stol(m[2])));
        } else {
            bad("object summand", part);
        }
        if (plus == std::string::npos) break;
        pos = plus + 1;
    }
    return out;
}

Word parseWord(const Params& p, const std::string& text) {
    static const std::regex xRe(R"(x\((-?\d+),(-?\d+)\))");
    static const std::regex zRe(R"(z\((-?\d+)\))");

    Word w;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        std::smatch m;
        if (std::regex_match(tok, m, xRe)) {
            int k = std::stoi(m[1]);
            if (k < 1 || k > p.r) bad("generator level", tok);
            w.push_back(Generator::x(k, std::stol(m[2])));
        } else if (std::regex_match(tok, m, zRe)) {
            int k = std::stoi(m[1]);
            if (k < 1 || k > p.r) bad("generator level", tok);
            w.push_back(Generator::z(k));
        } else {
            bad("generator", tok);
        }
    }
    return w;
}

Json toJson(const HallElement& e) {
    Json out = Json::array();
    for (const auto& [M, c] : e.terms())
        out.push_back(Json{{"obj", M.str()}, {"coeff", c.str()}});
    return out;
}

Json toJson(const FreeElement& e) {
    Json out = Json::array();
    for (const auto& [w, c] : e.terms())
        out.push_back(Json{{"word", wordStr(w)}, {"coeff", c.str()}});
    return out;
}

Json toJson(const GradedReport& r) {
    return Json{{"normal_count", r.normalCount},
                {"object_count", r.objectCount},
                {"equal", r.equal},
                {"rank_q2", r.rankQ2},
                {"rank_q3", r.rankQ3}};
}

Json toJson(const GentleReport& r) {
    return Json{{"out2", r.out2},
                {"in2", r.in2},
                {"unique_free", r.uniqueFree},
                {"unique_rel", r.uniqueRel},
                {"connected", r.connected},
                {"gentle", r.gentle()},
                {"one_cycle", r.oneCycle},
                {"cw", r.cw},
                {"acw", r.acw},
                {"clock", r.clock}};
}

Json toJson(const CanonicalParams& c) {
    Json out{{"p", c.p}, {"q", c.q}, {"r", c.r}};
    if (c.rm) {
        out["rC"] = c.rm->first;
        out["mC"] = c.rm->second;
    }
    return out;
}

namespace {

template <typename Terms>
std::string termsTsv(const Terms& terms) {
    std::ostringstream os;
    for (const auto& [key, c] : terms) {
        if constexpr (std::is_same_v<std::decay_t<decltype(key)>, Word>)
            os << wordStr(key);
        else
            os << key.str();
        os << '\t' << c.str() << '\n';
    }
    return os.str();
}

std::string kvTsv(const Json& j) {
    std::ostringstream os;
    for (const auto& [k, v] : j.items())
        os << k << '\t' << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    return os.str();
}

}  // namespace

std::string toTsv(const HallElement& e) { return termsTsv(e.terms()); }
std::string toTsv(const FreeElement& e) { return termsTsv(e.terms()); }
std::string toTsv(const GradedReport& r) { return kvTsv(toJson(r)); }
std::string toTsv(const GentleReport& r) { return kvTsv(toJson(r)); }
std::string toTsv(const CanonicalParams& c) { return kvTsv(toJson(c)); }

}  // namespace qhall
