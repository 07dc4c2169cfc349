#include "discrim/io.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <iomanip>
#include <sstream>

namespace discrim {

namespace {

struct Literal {
    std::string value;
    std::size_t line;
    std::size_t column;  // of the first character inside the quotes
};

// Every JSON string literal of the document, in order, with its position.
std::vector<Literal> string_literals(const std::string& text) {
    std::vector<Literal> out;
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '"') {
            Literal lit{{}, line, col + 1};
            ++i;
            ++col;
            while (i < text.size() && text[i] != '"') {
                if (text[i] == '\\' && i + 1 < text.size()) {
                    lit.value += text[i + 1];
                    i += 2;
                    col += 2;
                    continue;
                }
                lit.value += text[i];
                ++i;
                ++col;
            }
            ++col;
            out.push_back(std::move(lit));
            continue;
        }
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return out;
}

class ScalarReader {
public:
    explicit ScalarReader(const std::string& text) : literals_(string_literals(text)) {}

    Scalar read(const json& j, const std::string& where) const {
        if (j.is_number_integer()) return Scalar::parse(j.dump());
        if (!j.is_string()) throw InputError(where + ": scalars are strings or integers");
        const std::string s = j.get<std::string>();
        try {
            return Scalar::parse(s);
        } catch (const ScalarParseError& e) {
            for (const Literal& lit : literals_) {
                if (lit.value == s)
                    throw InputError(where + ": " + e.what() + " in \"" + s + "\"", lit.line,
                                     lit.column + e.column() - 1);
            }
            throw InputError(where + ": " + e.what() + " in \"" + s + "\"");
        }
    }

private:
    std::vector<Literal> literals_;
};

const json& member(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key)) throw InputError(where + ": missing \"" + key + "\"");
    return obj.at(key);
}

std::string pair_key(IndexPair p) { return std::to_string(p.first + 1) + "-" + std::to_string(p.second + 1); }

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        // Recover line/column from the byte offset.
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw InputError(std::string("malformed JSON: ") + e.what(), line, col);
    }
}

}  // namespace

json to_json(const Scalar& s) { return s.to_string(); }

json to_json(const Vector& v) {
    json out = json::array();
    for (const Scalar& s : v) out.push_back(to_json(s));
    return out;
}

json to_json(const Field& f) {
    if (f.is_rational()) return {{"type", "rational"}};
    return {{"type", "quadratic"}, {"d", f.radicand}};
}

json to_json(const Arrangement& a) {
    json hs = json::array();
    for (const Hyperplane& h : a.hyperplanes())
        hs.push_back({{"label", h.label}, {"normal", to_json(h.normal)}, {"offset", to_json(h.offset)}});
    return {{"dimension", a.dimension()}, {"field", to_json(a.field())}, {"hyperplanes", hs}};
}

Arrangement parse_arrangement(const std::string& text) {
    const json doc = parse_json(text);
    const ScalarReader reader(text);
    const json& dim = member(doc, "dimension", "document");
    if (!dim.is_number_unsigned() || dim.get<std::size_t>() == 0)
        throw InputError("\"dimension\" must be a positive integer");
    const std::size_t k = dim.get<std::size_t>();

    Field field;
    const json& fj = member(doc, "field", "document");
    const std::string type = member(fj, "type", "field").is_string() ? fj.at("type").get<std::string>() : "";
    if (type == "quadratic") {
        const json& d = member(fj, "d", "field");
        if (!d.is_number_integer() || d.get<long>() < 2) throw InputError("field.d must be an integer >= 2");
        field.radicand = d.get<long>();
    } else if (type != "rational") {
        throw InputError("field.type must be \"rational\" or \"quadratic\"");
    }

    const json& hj = member(doc, "hyperplanes", "document");
    if (!hj.is_array()) throw InputError("\"hyperplanes\" must be an array");
    std::vector<Hyperplane> hs;
    for (std::size_t i = 0; i < hj.size(); ++i) {
        const std::string where = "hyperplane " + std::to_string(i + 1);
        const json& h = hj[i];
        if (!h.is_object()) throw InputError(where + ": expected an object");
        Hyperplane out;
        if (h.contains("label")) {
            if (!h.at("label").is_string()) throw InputError(where + ": label must be a string");
            out.label = h.at("label").get<std::string>();
        } else {
            out.label = std::to_string(i + 1);
        }
        const json& nj = member(h, "normal", where);
        if (!nj.is_array()) throw InputError(where + ": normal must be an array");
        for (const json& s : nj) out.normal.push_back(reader.read(s, where));
        if (h.contains("offset")) out.offset = reader.read(h.at("offset"), where);
        hs.push_back(std::move(out));
    }
    try {
        return Arrangement(k, field, std::move(hs));
    } catch (const FieldMismatch& e) {
        throw PreconditionError("field_mismatch", e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Arrangement load_arrangement(const std::string& path) { return parse_arrangement(read_file(path)); }

std::string canonical_hash(const Arrangement& a) {
    const std::string bytes = to_json(a).dump();
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 failed");
    std::ostringstream hex;
    for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
    return hex.str();
}

json one_based(const std::vector<std::size_t>& v) {
    json out = json::array();
    for (std::size_t i : v) out.push_back(i + 1);
    return out;
}

json family_json(const DiscriminantalArrangement& b, const Flat& f) {
    json out = json::array();
    for (const Subset& s : index_family(b, f)) out.push_back(one_based(s));
    return out;
}

json to_json(const Involution& s) {
    json out = json::array();
    for (auto [a, b] : s.transpositions()) out.push_back({a + 1, b + 1});
    return out;
}

json to_json(const CompletionResult& c) {
    json lines = json::array();
    for (const auto& l : c.lines) lines.push_back(to_json(l));
    json orbit = json::object();
    for (const auto& [p, k] : c.orbit_map) orbit[pair_key(p)] = k + 1;
    return {{"sigma", to_json(c.sigma)}, {"lines", lines}, {"orbit_map", orbit}, {"axes", one_based(c.axes)}};
}

CompletionResult parse_completion(const std::string& text, std::size_t n) {
    const json doc = parse_json(text);
    const ScalarReader reader(text);
    CompletionResult c;

    std::vector<IndexPair> pairs;
    const json& sj = member(doc, "sigma", "completion");
    if (!sj.is_array()) throw InputError("completion.sigma must be an array of pairs");
    for (const json& p : sj) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_number_unsigned() || !p[1].is_number_unsigned() ||
            p[0].get<std::size_t>() == 0 || p[1].get<std::size_t>() == 0)
            throw InputError("completion.sigma entries are pairs of 1-based labels");
        pairs.emplace_back(p[0].get<std::size_t>() - 1, p[1].get<std::size_t>() - 1);
    }
    c.sigma = Involution(std::move(pairs), n);

    const json& lj = member(doc, "lines", "completion");
    if (!lj.is_array()) throw InputError("completion.lines must be an array");
    for (std::size_t i = 0; i < lj.size(); ++i) {
        const std::string where = "completion line " + std::to_string(i + 1);
        if (!lj[i].is_array() || lj[i].size() != 3) throw InputError(where + ": expected 3 coordinates");
        Vector v;
        for (const json& s : lj[i]) v.push_back(reader.read(s, where));
        if (is_zero(v)) throw InputError(where + ": zero line");
        c.lines.push_back(canonical_projective(v));
    }

    const json& oj = member(doc, "orbit_map", "completion");
    if (!oj.is_object()) throw InputError("completion.orbit_map must be an object");
    for (const auto& [key, value] : oj.items()) {
        std::size_t a = 0, b = 0;
        char dash = 0;
        std::istringstream ks(key);
        if (!(ks >> a >> dash >> b) || dash != '-' || a == 0 || b == 0 || a >= b || b > n || !value.is_number_unsigned() ||
            value.get<std::size_t>() == 0 || value.get<std::size_t>() > c.lines.size())
            throw InputError("completion.orbit_map: bad entry \"" + key + "\"");
        c.orbit_map[{a - 1, b - 1}] = value.get<std::size_t>() - 1;
    }
    if (doc.contains("axes")) {
        for (const json& x : doc.at("axes")) {
            if (!x.is_number_unsigned() || x.get<std::size_t>() == 0 || x.get<std::size_t>() > c.lines.size())
                throw InputError("completion.axes: bad line index");
            c.axes.push_back(x.get<std::size_t>() - 1);
        }
    }
    return c;
}

json to_json(const IncidenceStats& st) {
    json t = json::object();
    std::uint64_t sum = 0;
    for (const auto& [k, v] : st.t) {
        t[std::to_string(k)] = v;
        sum += v * binomial(k, 2);
    }
    json multiple = json::array();
    for (const IncidencePoint& p : st.points)
        if (p.multiplicity() >= 3) multiple.push_back({{"point", to_json(p.point)}, {"lines", one_based(p.lines)}});
    return {{"lines", st.lines},
            {"t", t},
            {"identity", {{"sum_t_k_binom_k_2", sum}, {"binom_s_2", binomial(st.lines, 2)}}},
            {"points_multiplicity_3_plus", multiple}};
}

}  // namespace discrim
