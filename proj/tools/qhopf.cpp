#include <chrono>
#include <iomanip>
#include <set>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qhopf/braided.hpp"
#include "qhopf/catalog.hpp"
#include "qhopf/error.hpp"
#include "qhopf/io.hpp"
#include "qhopf/validate.hpp"

using namespace qhopf;
using nlohmann::json;

namespace {

constexpr int kOk = 0, kMathFailure = 1, kInputError = 2;

struct Options {
    std::string file;
    bool json_out = false;
    bool no_validate = false;
    bool strict_r = false;
    std::string kind = "right";
    std::string method = "solve";
    int monad = 2;
    std::string show = "all";
    std::string omega_file;
    std::vector<std::string> catalog_args;
    std::string out;
    bool list = false;
};

class Report {
public:
    explicit Report(std::string command) { doc_["schema"] = "qhopf-report/1"; doc_["command"] = std::move(command); }

    json& results() { return doc_["results"]; }
    void line(const std::string& s) { text_ << s << "\n"; }
    void check(const std::string& name, bool pass, const std::string& witness = {}) {
        doc_["checks"].push_back({{"name", name}, {"pass", pass}, {"witness", witness}});
        if (!pass) failed_ = true;
    }
    bool failed() const { return failed_; }
    void algebra(const QuasiHopfAlgebra& a) {
        doc_["algebra"] = {{"name", a.name()}, {"dim", a.dim()}, {"field", a.presentation().field.name()}};
        line("algebra " + a.name() + ", dim " + std::to_string(a.dim()) + ", field " + a.presentation().field.name());
    }

    template <class F>
    auto timed(const std::string& stage, F&& f) {
        const auto t0 = std::chrono::steady_clock::now();
        auto finish = [&] {
            const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            doc_["timings"][stage] = s;
            timings_.emplace_back(stage, s);
        };
        if constexpr (std::is_void_v<decltype(f())>) {
            f();
            finish();
        } else {
            auto r = f();
            finish();
            return r;
        }
    }

    int emit(bool as_json, int code, const Error* err = nullptr) {
        static const char* status[] = {"ok", "failure", "input-error"};
        doc_["status"] = status[code];
        doc_["exit_code"] = code;
        if (!doc_.contains("checks")) doc_["checks"] = json::array();
        if (!doc_.contains("results")) doc_["results"] = json::object();
        if (!doc_.contains("timings")) doc_["timings"] = json::object();
        if (err) doc_["error"] = {{"kind", to_string(err->kind())}, {"message", err->what()}};
        if (as_json) {
            std::cout << doc_.dump(2) << "\n";
        } else {
            std::cout << text_.str();
            if (err) std::cerr << "error: " << err->what() << "\n";
            if (!timings_.empty()) {
                std::ostringstream t;
                t << "time:";
                for (const auto& [s, v] : timings_) t << " " << s << " " << std::fixed << std::setprecision(3) << v << "s";
                std::cout << t.str() << "\n";
            }
        }
        return code;
    }

private:
    json doc_;
    std::ostringstream text_;
    std::vector<std::pair<std::string, double>> timings_;
    bool failed_ = false;
};

json sparse(const Vec& v) {
    json a = json::array();
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) a.push_back(json::array({i, v[i].to_string()}));
    return a;
}

json sparse(const Tensor& t) {
    json a = json::array();
    int idx[kMaxOrder];
    for (const auto& [key, c] : t.terms()) {
        t.decode(key, idx);
        json row = json::array();
        for (int k = 0; k < t.order(); ++k) row.push_back(idx[k]);
        row.push_back(c.to_string());
        a.push_back(std::move(row));
    }
    return a;
}

json form_json(const QuasiHopfAlgebra& a, const Vec& f) { return {{"text", render_form(a, f)}, {"terms", sparse(f)}}; }
json elem_json(const QuasiHopfAlgebra& a, const Vec& v) { return {{"text", render_element(a, v)}, {"terms", sparse(v)}}; }
json tensor_json(const QuasiHopfAlgebra& a, const Tensor& t) { return {{"text", render_tensor(a, t)}, {"terms", sparse(t)}}; }

json matrix_json(const Mat& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j).to_string());
        rows.push_back(std::move(r));
    }
    return rows;
}

std::string opt_scalar(const std::optional<Scalar>& s) { return s ? s->to_string() : "none"; }

// Loads, and validates unless told not to. Returns false when validation failed.
bool load(const Options& o, Report& rep, AlgebraPtr& out) {
    Presentation p = rep.timed("load", [&] { return load_presentation(o.file); });
    out = std::make_shared<const QuasiHopfAlgebra>(std::move(p));
    rep.algebra(*out);
    if (o.no_validate) return true;
    ValidateOptions vo;
    vo.strict_r = o.strict_r;
    const auto vr = rep.timed("validate", [&] { return validate(*out, vo); });
    if (vr.ok()) return true;
    const auto* f = vr.first_failure();
    rep.check("validate:" + f->name, false, f->witness);
    rep.line("validation failed: " + f->name + " at " + f->witness);
    return false;
}

int cmd_validate(const Options& o, Report& rep) {
    const Presentation p = rep.timed("load", [&] { return load_presentation(o.file); });
    const QuasiHopfAlgebra a(p);
    rep.algebra(a);
    ValidateOptions vo;
    vo.strict_r = o.strict_r;
    const auto vr = rep.timed("validate", [&] { return validate(a, vo); });
    int failed = 0;
    for (const auto& c : vr.checks) {
        rep.check(c.name, c.pass, c.witness);
        if (!c.pass) {
            ++failed;
            rep.line("FAIL " + c.name + " at " + c.witness);
        }
    }
    rep.line(failed ? std::to_string(failed) + " of " + std::to_string(vr.checks.size()) + " checks failed"
                    : "all " + std::to_string(vr.checks.size()) + " checks passed");
    return failed ? kMathFailure : kOk;
}

int cmd_elements(const Options& o, Report& rep) {
    AlgebraPtr ap;
    if (!load(o, rep, ap)) return kMathFailure;
    Analysis an(ap);
    const auto& a = an.alg();
    const auto& d = rep.timed("elements", [&]() -> const DerivedElements& { return an.elements(); });
    std::vector<std::pair<std::string, const Tensor*>> tensors{
        {"qR", &d.qR},   {"pR", &d.pR},       {"qL", &d.qL}, {"pL", &d.pL},         {"eps", &d.eps},
        {"delta", &d.delta}, {"f", &d.f},     {"f_inv", &d.f_inv}, {"fr", &d.fr},   {"fr_inv", &d.fr_inv},
        {"U", &d.U},     {"V", &d.V},         {"Ucop", &d.Ucop}, {"Vcop", &d.Vcop}};
    std::set<std::string> want;
    if (o.show != "all") {
        std::stringstream ss(o.show);
        for (std::string s; std::getline(ss, s, ',');) want.insert(s);
    }
    const bool all = want.empty();
    auto wanted = [&](const std::string& n) { return all || want.count(n); };
    json& out = rep.results()["elements"];
    out = json::object();
    for (const auto& [n, t] : tensors)
        if (wanted(n)) {
            out[n] = tensor_json(a, *t);
            rep.line(n + " = " + render_tensor(a, *t));
            want.erase(n);
        }
    rep.check("eps_forms_agree", d.eps_forms_agree());
    rep.check("delta_forms_agree", d.delta_forms_agree());
    const auto& m = rep.timed("modulus", [&]() -> const ModulusElements& { return an.modulus(); });
    std::vector<std::pair<std::string, const Vec*>> vecs{{"gamma", &an.integrals().modulus}, {"u", &m.u}, {"u_cop", &m.u_cop},
                                                         {"xi", &m.xi}, {"xi_hat", &m.xi_hat}};
    if (m.theta) vecs.emplace_back("theta", &*m.theta);
    if (m.theta_hat) vecs.emplace_back("theta_hat", &*m.theta_hat);
    for (const auto& [n, v] : vecs)
        if (wanted(n)) {
            const bool form = n == "gamma";
            out[n] = form ? form_json(a, *v) : elem_json(a, *v);
            rep.line(n + " = " + (form ? render_form(a, *v) : render_element(a, *v)));
            want.erase(n);
        }
    if (!all)
        for (const auto& n : want) throw Error(ErrorKind::MalformedInput, "unknown or unavailable element '" + n + "'");
    return rep.failed() ? kMathFailure : kOk;
}

int cmd_integrals(const Options& o, Report& rep) {
    AlgebraPtr ap;
    if (!load(o, rep, ap)) return kMathFailure;
    const auto& a = *ap;
    const auto in = rep.timed("integrals", [&] { return compute_integrals(a); });
    json& r = rep.results();
    r["left_integral"] = elem_json(a, in.left_integral);
    r["right_integral"] = elem_json(a, in.right_integral);
    r["modulus"] = form_json(a, in.modulus);
    r["unimodular"] = in.unimodular;
    rep.line("left integral  c^l = " + render_element(a, in.left_integral));
    rep.line("right integral c^r = " + render_element(a, in.right_integral));
    rep.line("modulus gamma = " + render_form(a, in.modulus));
    rep.line(std::string("unimodular: ") + (in.unimodular ? "yes" : "no"));
    return kOk;
}

int cmd_cointegrals(const Options& o, Report& rep) {
    const CointegralKind kind = parse_cointegral_kind(o.kind);
    AlgebraPtr ap;
    if (!load(o, rep, ap)) return kMathFailure;
    Analysis an(ap);
    const auto& a = an.alg();
    json& r = rep.results();
    r["kind"] = to_string(kind);
    r["method"] = o.method;
    Vec form;
    if (o.method == "solve") {
        const auto& s = rep.timed("solve", [&]() -> const CointegralSolution& { return an.cointegral(kind); });
        form = s.form;
        r["rows"] = s.system.rows;
        r["rank"] = s.system.rank;
        r["kernel_dim"] = s.system.basis.size();
    } else {
        if (kind != CointegralKind::LeftSym && kind != CointegralKind::RightSym)
            throw Error(ErrorKind::MalformedInput, "--method formula applies to left-sym and right-sym only");
        form = rep.timed("formula", [&] { 
            const auto src = kind == CointegralKind::RightSym ? CointegralKind::Right : CointegralKind::Left;
            return normalized(sym_cointegral_via_formula(a, an.modulus(), an.cointegral(src).form, kind));
        });
    }
    r["form"] = form_json(a, form);
    r["normalization"] = "first non-zero coefficient is 1";
    rep.line(std::string(to_string(kind)) + " cointegral = " + render_form(a, form));
    if (kind == CointegralKind::LeftSym || kind == CointegralKind::RightSym) {
        const auto bad = symmetry_violation(a, an.integrals().modulus, form, kind);
        rep.check("gamma_symmetric", !bad, bad ? a.label(bad->first) + "," + a.label(bad->second) : "");
    }
    rep.check("nondegenerate", pairing_matrix(a, form).rank() == static_cast<std::size_t>(a.dim()));
    return rep.failed() ? kMathFailure : kOk;
}

int cmd_monadic(const Options& o, Report& rep) {
    AlgebraPtr ap;
    if (!load(o, rep, ap)) return kMathFailure;
    Analysis an(ap);
    const auto& a = an.alg();
    const auto& s = rep.timed("solve", [&]() -> const MonadicSolution& { return an.monadic(o.monad); });
    json& r = rep.results();
    r["monad"] = o.monad;
    r["form"] = form_json(a, s.form);
    r["rows"] = s.system.rows;
    r["rank"] = s.system.rank;
    r["direct_kernel_dim"] = s.direct_kernel_dim;
    r["normalization"] = "first non-zero coefficient is 1";
    rep.line("monadic cointegral for A_" + std::to_string(o.monad) + " = " + render_form(a, s.form));
    rep.line("kernel of the linear equation alone: " + std::to_string(s.direct_kernel_dim));
    return kOk;
}

int cmd_verify(const Options& o, Report& rep) {
    AlgebraPtr ap;
    if (!load(o, rep, ap)) return kMathFailure;
    Analysis an(ap);
    const auto& a = an.alg();
    const auto t = rep.timed("theorem", [&] { return verify_main_theorem(an); });
    json rows = json::array();
    rep.line("row  monad  source     status  ratio");
    for (const auto& row : t.rows) {
        const std::string status = !row.applicable ? "n/a" : (row.pass ? "pass" : "FAIL");
        json jr = {{"row", row.monad}, {"monad", "A_" + std::to_string(row.monad)}, {"source", to_string(row.source)},
                   {"applicable", row.applicable}, {"pass", row.pass}};
        if (row.applicable) {
            jr["ratio"] = opt_scalar(row.ratio);
            jr["image"] = form_json(a, row.image);
            jr["monadic"] = form_json(a, row.monadic);
        }
        rows.push_back(jr);
        std::ostringstream l;
        l << std::left << std::setw(5) << row.monad << std::setw(7) << ("A_" + std::to_string(row.monad)) << std::setw(11)
          << to_string(row.source) << std::setw(8) << status << (row.applicable ? opt_scalar(row.ratio) : "");
        rep.line(l.str());
        if (row.applicable) {
            rep.check("row" + std::to_string(row.monad), row.pass,
                      row.pass ? "" : "image " + render_form(a, row.image) + " vs " + render_form(a, row.monadic));
        }
    }
    rep.results()["rows"] = rows;
    const auto& sq = t.square;
    rep.results()["square"] = {{"pass", sq.pass}, {"exact", sq.exact}, {"prefactor", sq.prefactor.to_string()}, {"ratio", opt_scalar(sq.ratio)}};
    rep.check("square", sq.pass, sq.pass ? "" : "ratio " + opt_scalar(sq.ratio));
    rep.line("square: " + std::string(sq.pass ? "pass" : "FAIL") + ", prefactor " + sq.prefactor.to_string() + ", ratio " +
             opt_scalar(sq.ratio));
    return t.ok() ? kOk : kMathFailure;
}

int cmd_sl2z(const Options& o, Report& rep) {
    AlgebraPtr ap;
    if (!load(o, rep, ap)) return kMathFailure;
    Analysis an(ap);
    const auto& a = an.alg();
    std::optional<Tensor> w;
    if (!o.omega_file.empty()) w = load_omega_hat(o.omega_file, a.presentation());
    const auto s = rep.timed("sl2z", [&] { return sl2z_action(an, w); });
    json& r = rep.results();
    r["center_dim"] = s.center.center_basis.size();
    r["alphaZ_basis"] = json::array();
    rep.line("dim Z(H) = " + std::to_string(s.center.center_basis.size()) + ", dim alphaZ = " +
             std::to_string(s.center.alphaZ_basis.size()));
    for (std::size_t k = 0; k < s.center.alphaZ_basis.size(); ++k) {
        r["alphaZ_basis"].push_back(elem_json(a, s.center.alphaZ_basis[k]));
        rep.line("  w" + std::to_string(k) + " = " + render_element(a, s.center.alphaZ_basis[k]));
    }
    r["S"] = matrix_json(s.S);
    r["T"] = matrix_json(s.T);
    r["c"] = opt_scalar(s.c);
    rep.line("S =");
    rep.line(render_matrix(s.S));
    rep.line("T =");
    rep.line(render_matrix(s.T));
    rep.line("(ST)^3 = c S^2 with c = " + opt_scalar(s.c));
    rep.check("s_formulas_agree", s.formulas_agree);
    rep.check("s_invertible", s.S_invertible);
    rep.check("st_relation", s.c && !s.c->is_zero());
    return s.ok() ? kOk : kMathFailure;
}

int cmd_catalog(const Options& o, Report& rep) {
    if (o.list || o.catalog_args.empty()) {
        for (const auto& e : catalog_entries()) {
            rep.results()["entries"].push_back({{"name", e.name}, {"description", e.description}});
            rep.line(e.name + "  " + e.description);
        }
        return kOk;
    }
    std::string name = o.catalog_args[0];
    std::size_t first = 1;
    if (name == "hopf") {
        if (o.catalog_args.size() < 2) throw Error(ErrorKind::MalformedInput, "hopf needs an algebra: zn, sweedler, taft, zn-braided");
        name = o.catalog_args[1];
        first = 2;
    }
    std::vector<int> params;
    for (std::size_t i = first; i < o.catalog_args.size(); ++i) {
        try {
            std::size_t used = 0;
            params.push_back(std::stoi(o.catalog_args[i], &used));
            if (used != o.catalog_args[i].size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw Error(ErrorKind::MalformedInput, "parameter '" + o.catalog_args[i] + "' is not an integer");
        }
    }
    const Presentation p = make_catalog(name, params);
    if (o.out.empty()) {
        std::cout << presentation_to_json(p);
        return kOk;
    }
    save_presentation(o.out, p);
    rep.results()["written"] = o.out;
    rep.results()["name"] = p.name;
    rep.results()["dim"] = p.dim;
    rep.line("wrote " + p.name + " (dim " + std::to_string(p.dim) + ") to " + o.out);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with finite-dimensional quasi-Hopf algebras"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--json", o.json_out, "print the report as JSON");
    app.add_flag("--no-validate", o.no_validate, "skip axiom validation on load");
    app.add_flag("--strict-r", o.strict_r, "also check the hexagon identities");

    auto with_file = [&](const char* name, const char* help) {
        auto* s = app.add_subcommand(name, help);
        s->add_option("file", o.file, "presentation file (JSON)")->required();
        s->add_flag("--json", o.json_out, "print the report as JSON");
        s->add_flag("--no-validate", o.no_validate, "skip axiom validation on load");
        s->add_flag("--strict-r", o.strict_r, "also check the hexagon identities");
        return s;
    };
    auto* validate_cmd = with_file("validate", "check the quasi-Hopf axioms");
    auto* elements_cmd = with_file("elements", "derived elements q, p, f, U, V, u, xi, theta");
    elements_cmd->add_option("--show", o.show, "comma separated names, or all");
    auto* integrals_cmd = with_file("integrals", "left and right integrals and the modulus");
    auto* coint_cmd = with_file("cointegrals", "HN or gamma-symmetrised cointegrals");
    coint_cmd->add_option("--kind", o.kind, "left, right, left-sym or right-sym")
        ->check(CLI::IsMember({"left", "right", "left-sym", "right-sym"}));
    coint_cmd->add_option("--method", o.method, "solve or formula")->check(CLI::IsMember({"solve", "formula"}));
    auto* mon_cmd = with_file("monadic", "monadic cointegral for A_i");
    mon_cmd->add_option("--i", o.monad, "monad index 1..4")->check(CLI::Range(1, 4));
    auto* verify_cmd = with_file("verify-theorem", "check all cointegral correspondences");
    auto* sl2z_cmd = with_file("sl2z", "S and T on alpha Z");
    sl2z_cmd->add_option("--omega-hat", o.omega_file, "file holding omega-hat");
    auto* cat_cmd = app.add_subcommand("catalog", "write a built-in algebra");
    cat_cmd->add_option("args", o.catalog_args, "name and integer parameters, e.g. sf 3 1 or hopf taft 3");
    cat_cmd->add_option("--out", o.out, "output file (default stdout)");
    cat_cmd->add_flag("--list", o.list, "list the available algebras");
    cat_cmd->add_flag("--json", o.json_out, "print the report as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    CLI::App* sub = app.get_subcommands().front();
    Report rep(sub->get_name());
    try {
        int code = kOk;
        if (sub == validate_cmd) code = cmd_validate(o, rep);
        else if (sub == elements_cmd) code = cmd_elements(o, rep);
        else if (sub == integrals_cmd) code = cmd_integrals(o, rep);
        else if (sub == coint_cmd) code = cmd_cointegrals(o, rep);
        else if (sub == mon_cmd) code = cmd_monadic(o, rep);
        else if (sub == verify_cmd) code = cmd_verify(o, rep);
        else if (sub == sl2z_cmd) code = cmd_sl2z(o, rep);
        else code = cmd_catalog(o, rep);
        return rep.emit(o.json_out, code);
    } catch (const Error& e) {
        return rep.emit(o.json_out, e.is_input_error() ? kInputError : kMathFailure, &e);
    } catch (const std::exception& e) {
        const Error wrapped(ErrorKind::MalformedInput, e.what());
        return rep.emit(o.json_out, kInputError, &wrapped);
    }
}
