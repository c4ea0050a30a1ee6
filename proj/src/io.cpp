#include "qhopf/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qhopf/error.hpp"

namespace qhopf {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::MalformedInput, what); }

json vec_json(const Vec& v) {
    json a = json::array();
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) a.push_back(json::array({i, v[i].to_string()}));
    return a;
}

json tensor_json(const Tensor& t) {
    json a = json::array();
    int idx[kMaxOrder];
    for (const auto& [key, c] : t.terms()) {
        t.decode(key, idx);
        json row = json::array();
        for (int s = 0; s < t.order(); ++s) row.push_back(idx[s]);
        row.push_back(c.to_string());
        a.push_back(std::move(row));
    }
    return a;
}

json mat_json(const Mat& m) {
    json a = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) a.push_back(json::array({i, j, m(i, j).to_string()}));
    return a;
}

struct Reader {
    const CyclotomicField& field;
    int dim;

    Scalar scalar(const json& j, const std::string& where) const {
        if (j.is_string()) return Scalar::parse(j.get<std::string>(), field);
        if (j.is_number_integer()) return Scalar(j.get<long>());
        bad(where + ": scalars must be strings");
    }
    int index(const json& j, const std::string& where) const {
        if (!j.is_number_integer()) bad(where + ": index is not an integer");
        const long i = j.get<long>();
        if (i < 0 || i >= dim) bad(where + ": index " + std::to_string(i) + " out of range");
        return static_cast<int>(i);
    }
    const json& list(const json& j, const std::string& where) const {
        if (!j.is_array()) bad(where + " must be a list");
        return j;
    }
    Vec vec(const json& j, const std::string& where) const {
        Vec v(static_cast<std::size_t>(dim));
        for (const auto& e : list(j, where)) {
            if (!e.is_array() || e.size() != 2) bad(where + ": entries are [i, c]");
            v[static_cast<std::size_t>(index(e[0], where))] += scalar(e[1], where);
        }
        return v;
    }
    Tensor tensor(const json& j, int order, const std::string& where) const {
        TensorBuilder b(order, dim);
        int idx[kMaxOrder];
        for (const auto& e : list(j, where)) {
            if (!e.is_array() || e.size() != static_cast<std::size_t>(order) + 1)
                bad(where + ": entries need " + std::to_string(order) + " indices and a scalar");
            for (int s = 0; s < order; ++s) idx[s] = index(e[static_cast<std::size_t>(s)], where);
            b.add(idx, scalar(e[static_cast<std::size_t>(order)], where));
        }
        return b.build();
    }
    Mat mat(const json& j, const std::string& where) const {
        Mat m(static_cast<std::size_t>(dim), static_cast<std::size_t>(dim));
        for (const auto& e : list(j, where)) {
            if (!e.is_array() || e.size() != 3) bad(where + ": entries are [i, j, c]");
            m(static_cast<std::size_t>(index(e[0], where)), static_cast<std::size_t>(index(e[1], where))) += scalar(e[2], where);
        }
        return m;
    }
};

const json& need(const json& doc, const char* key) {
    auto it = doc.find(key);
    if (it == doc.end()) bad(std::string("missing key '") + key + "'");
    return *it;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) bad("cannot read '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace

std::string presentation_to_json(const Presentation& p, int indent) {
    json d;
    d["name"] = p.name;
    d["field"] = {{"conductor", p.field.conductor}};
    d["dim"] = p.dim;
    d["basis"] = p.basis;
    d["unit"] = vec_json(p.unit);
    d["counit"] = vec_json(p.counit);
    d["mult"] = tensor_json(p.mult);
    d["coproduct"] = tensor_json(p.coproduct);
    d["coassociator"] = tensor_json(p.coassociator);
    d["coassociator_inv"] = tensor_json(p.coassociator_inv);
    d["antipode"] = mat_json(p.antipode);
    d["alpha"] = vec_json(p.alpha);
    d["beta"] = vec_json(p.beta);
    if (p.pivot) d["pivot"] = vec_json(*p.pivot);
    if (p.r_matrix) d["r_matrix"] = tensor_json(*p.r_matrix);
    if (p.r_matrix_inv) d["r_matrix_inv"] = tensor_json(*p.r_matrix_inv);
    if (p.ribbon) d["ribbon"] = vec_json(*p.ribbon);
    if (p.omega_hat) d["omega_hat"] = tensor_json(*p.omega_hat);
    if (p.modulus_hint) d["modulus_hint"] = vec_json(*p.modulus_hint);
    return d.dump(indent) + "\n";
}

Presentation presentation_from_json(std::string_view text) {
    const json d = parse_json(text);
    if (!d.is_object()) bad("presentation must be a JSON object");
    Presentation p;
    p.name = d.value("name", std::string("unnamed"));
    const json& f = need(d, "field");
    if (f.is_object() && f.contains("conductor") && f["conductor"].is_number_integer())
        p.field = FieldSpec{f["conductor"].get<int>()};
    else if (f.is_string())
        p.field = FieldSpec::parse(f.get<std::string>());
    else
        bad("field must be {\"conductor\": n}");
    if (p.field.conductor < 1 || p.field.conductor > 1000) bad("unsupported conductor");
    const json& dim = need(d, "dim");
    if (!dim.is_number_integer() || dim.get<long>() < 1 || dim.get<long>() > 4096) bad("dim must be a positive integer");
    p.dim = dim.get<int>();
    const Reader r{p.field.field(), p.dim};
    if (d.contains("basis")) {
        for (const auto& b : r.list(d["basis"], "basis")) {
            if (!b.is_string()) bad("basis labels must be strings");
            p.basis.push_back(b.get<std::string>());
        }
        if (static_cast<int>(p.basis.size()) != p.dim) bad("basis has the wrong length");
    } else {
        for (int i = 0; i < p.dim; ++i) p.basis.push_back("e" + std::to_string(i));
    }
    p.unit = r.vec(need(d, "unit"), "unit");
    p.counit = r.vec(need(d, "counit"), "counit");
    p.mult = r.tensor(need(d, "mult"), 3, "mult");
    p.coproduct = r.tensor(need(d, "coproduct"), 3, "coproduct");
    p.coassociator = r.tensor(need(d, "coassociator"), 3, "coassociator");
    p.coassociator_inv = r.tensor(need(d, "coassociator_inv"), 3, "coassociator_inv");
    p.antipode = r.mat(need(d, "antipode"), "antipode");
    p.alpha = r.vec(need(d, "alpha"), "alpha");
    p.beta = r.vec(need(d, "beta"), "beta");
    if (d.contains("pivot")) p.pivot = r.vec(d["pivot"], "pivot");
    if (d.contains("r_matrix")) p.r_matrix = r.tensor(d["r_matrix"], 2, "r_matrix");
    if (d.contains("r_matrix_inv")) p.r_matrix_inv = r.tensor(d["r_matrix_inv"], 2, "r_matrix_inv");
    if (p.r_matrix.has_value() != p.r_matrix_inv.has_value()) bad("r_matrix and r_matrix_inv come together");
    if (d.contains("ribbon")) p.ribbon = r.vec(d["ribbon"], "ribbon");
    if (d.contains("omega_hat")) p.omega_hat = r.tensor(d["omega_hat"], 2, "omega_hat");
    if (d.contains("modulus_hint")) p.modulus_hint = r.vec(d["modulus_hint"], "modulus_hint");
    return p;
}

Presentation load_presentation(const std::string& path) { return presentation_from_json(read_file(path)); }

void save_presentation(const std::string& path, const Presentation& p) {
    std::ofstream out(path, std::ios::binary);
    if (!out) bad("cannot write '" + path + "'");
    out << presentation_to_json(p);
}

Tensor load_omega_hat(const std::string& path, const Presentation& p) {
    const json d = parse_json(read_file(path));
    const Reader r{p.field.field(), p.dim};
    if (d.is_object()) return r.tensor(need(d, "omega_hat"), 2, "omega_hat");
    return r.tensor(d, 2, "omega_hat");
}

std::string render_scalar(const Scalar& s) {
    const std::string t = s.to_string();
    const bool simple = t.find_first_of(" ") == std::string::npos;
    return simple ? t : "(" + t + ")";
}

namespace {

std::string join_terms(const std::vector<std::pair<Scalar, std::string>>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [c, name] : terms) {
        std::string coeff;
        bool neg = false;
        if (c == Scalar(1)) {
        } else if (c == Scalar(-1)) {
            neg = true;
        } else {
            const std::string t = render_scalar(c);
            if (t[0] == '-' && t.find_first_of(" ") == std::string::npos) {
                neg = true;
                coeff = t.substr(1) + "*";
            } else {
                coeff = t + "*";
            }
        }
        if (out.empty())
            out = (neg ? "-" : "") + coeff + name;
        else
            out += (neg ? " - " : " + ") + coeff + name;
    }
    return out;
}

}  // namespace

std::string render_element(const QuasiHopfAlgebra& a, const Vec& v) {
    std::vector<std::pair<Scalar, std::string>> terms;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) terms.emplace_back(v[i], a.label(static_cast<int>(i)));
    return join_terms(terms);
}

std::string render_form(const QuasiHopfAlgebra& a, const Vec& f) {
    std::vector<std::pair<Scalar, std::string>> terms;
    for (std::size_t i = 0; i < f.size(); ++i)
        if (!f[i].is_zero()) terms.emplace_back(f[i], "B*_{" + a.label(static_cast<int>(i)) + "}");
    return join_terms(terms);
}

std::string render_tensor(const QuasiHopfAlgebra& a, const Tensor& t) {
    std::vector<std::pair<Scalar, std::string>> terms;
    int idx[kMaxOrder];
    for (const auto& [key, c] : t.terms()) {
        t.decode(key, idx);
        std::string s;
        for (int k = 0; k < t.order(); ++k) s += (k ? " (x) " : "") + a.label(idx[k]);
        terms.emplace_back(c, s);
    }
    return join_terms(terms);
}

std::string render_matrix(const Mat& m) {
    std::vector<std::vector<std::string>> cells(m.rows());
    std::size_t w = 1;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            cells[i].push_back(m(i, j).to_string());
            w = std::max(w, cells[i].back().size());
        }
    std::string out;
    for (const auto& row : cells) {
        out += "[";
        for (std::size_t j = 0; j < row.size(); ++j) out += (j ? "  " : " ") + std::string(w - row[j].size(), ' ') + row[j];
        out += " ]\n";
    }
    return out;
}

}  // namespace qhopf
