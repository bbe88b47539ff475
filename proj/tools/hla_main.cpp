// Batch driver: validation, cohomology, extensions, crossed modules and free
// objects over .hla workspace files, reporting JSON on stdout.
//
// Exit codes: 0 = computation done (mathematical verdicts may still be
// negative), 1 = `validate` found an invalid structure, 2 = usage, parse or
// file errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "homlie/crossed.hpp"
#include "homlie/dsl.hpp"
#include "homlie/free_homlie.hpp"

using json = nlohmann::ordered_json;
using namespace homlie;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fnv1a64(const std::string& data)
{
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << "fnv1a64:" << std::hex << h;
    return os.str();
}

json jmat(const Matrix& m)
{
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j)
            row.push_back(rat_to_string(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

json jvec(const Vec& v)
{
    json row = json::array();
    for (const Rat& x : v)
        row.push_back(rat_to_string(x));
    return row;
}

struct Loaded {
    std::string path;
    std::string text;
    Workspace ws;
};

Loaded load(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    Loaded l;
    l.path = path;
    l.text = buf.str();
    l.ws = parse_workspace(l.text);
    return l;
}

json envelope(const std::string& command, const Loaded* input)
{
    json j;
    j["command"] = command;
    if (input) {
        j["input"]["file"] = input->path;
        j["input"]["digest"] = fnv1a64(input->text);
    }
    return j;
}

const AlgebraDef& need_algebra(const Workspace& ws, const std::string& name)
{
    const AlgebraDef* a = ws.find_algebra(name);
    if (!a)
        throw UsageError("no algebra named '" + name + "'");
    return *a;
}

const ModuleDef& need_module(const Workspace& ws, const std::string& name)
{
    const ModuleDef* m = ws.find_module(name);
    if (!m)
        throw UsageError("no module named '" + name + "'");
    return *m;
}

const MapDef& need_map(const Workspace& ws, const std::string& name)
{
    const MapDef* m = ws.find_map(name);
    if (!m)
        throw UsageError("no map named '" + name + "'");
    return *m;
}

Cochain cocycle_of_map(const Workspace& ws, const ModuleDef& mod, const std::string& name)
{
    const MapDef& w = need_map(ws, name);
    if (!w.wedge_source || w.source != mod.over || w.target != mod.name)
        throw UsageError("map '" + name + "' is not " + mod.over + " ^ " + mod.over + " -> " +
                         mod.name);
    Cochain c;
    c.degree = 2;
    c.values = w.matrix;
    return c;
}

int emit(const json& j, bool pretty, int code)
{
    if (pretty)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << j.dump() << "\n";
    return code;
}

// ---- subcommand implementations ----

int run_validate(const std::string& file, bool pretty)
{
    Loaded l = load(file);
    json rep = envelope("validate", &l);
    bool all_ok = true;
    json algebras = json::array();
    for (const AlgebraDef& a : l.ws.algebras) {
        AlgebraReport r = validate_hom_lie(a.algebra);
        json ja;
        ja["name"] = a.name;
        ja["skew"] = r.skew;
        ja["hom_jacobi"] = r.hom_jacobi;
        ja["multiplicative"] = r.multiplicative;
        ja["regular"] = r.regular;
        ja["valid"] = r.valid();
        all_ok = all_ok && r.valid();
        algebras.push_back(ja);
    }
    json modules = json::array();
    for (const ModuleDef& m : l.ws.modules) {
        ActionReport r = validate_action(m.action);
        json jm;
        jm["name"] = m.name;
        jm["over"] = m.over;
        jm["axiom_a"] = r.axiom_a;
        jm["axiom_b"] = r.axiom_b;
        jm["axiom_c"] = r.axiom_c;
        jm["target_abelian"] = r.target_abelian;
        jm["is_module"] = r.is_module();
        all_ok = all_ok && r.valid();
        modules.push_back(jm);
    }
    json maps = json::array();
    for (const MapDef& m : l.ws.maps) {
        json jm;
        jm["name"] = m.name;
        jm["source"] = m.source;
        jm["target"] = m.target;
        jm["wedge_source"] = m.wedge_source;
        jm["rows"] = m.matrix.rows();
        jm["cols"] = m.matrix.cols();
        maps.push_back(jm);
    }
    rep["result"]["algebras"] = algebras;
    rep["result"]["modules"] = modules;
    rep["result"]["maps"] = maps;
    rep["result"]["all_valid"] = all_ok;
    return emit(rep, pretty, all_ok ? 0 : 1);
}

int run_cohomology(const std::string& file, const std::string& algebra,
                   const std::string& module, int max_degree, bool pretty)
{
    Loaded l = load(file);
    const ModuleDef& m = need_module(l.ws, module);
    if (m.over != algebra)
        throw UsageError("module '" + module + "' is not over algebra '" + algebra + "'");
    json rep = envelope("cohomology", &l);
    rep["result"]["algebra"] = algebra;
    rep["result"]["module"] = module;
    json table = json::array();
    for (int n = 0; n <= max_degree; ++n) {
        CohomologyGroup g = cohomology_group(m.action, n);
        json row;
        row["degree"] = n;
        row["cochain_dim"] = g.cochain_dim;
        row["cocycle_dim"] = g.cocycle_dim;
        row["coboundary_dim"] = g.coboundary_dim;
        row["h_dim"] = g.dim;
        json reps = json::array();
        for (const Cochain& r : g.representatives)
            reps.push_back(jmat(r.values));
        row["representatives"] = reps;
        table.push_back(row);
    }
    rep["result"]["groups"] = table;
    return emit(rep, pretty, 0);
}

json jext_report(const ExtensionReport& r)
{
    json j;
    j["dims_ok"] = r.dims_ok;
    j["i_injective"] = r.i_injective;
    j["i_equivariant"] = r.i_equivariant;
    j["kernel_abelian"] = r.kernel_abelian;
    j["pi_surjective"] = r.pi_surjective;
    j["pi_morphism"] = r.pi_morphism;
    j["exact"] = r.exact;
    j["section_splits"] = r.section_splits;
    j["section_equivariant"] = r.section_equivariant;
    j["s_condition"] = r.s_condition;
    j["valid"] = r.valid();
    return j;
}

AbelianExtension extension_from_names(const Loaded& l, const ModuleDef& mod,
                                      const std::string& Ename, const std::string& iname,
                                      const std::string& piname, const std::string& signame)
{
    AbelianExtension ext;
    ext.E = need_algebra(l.ws, Ename).algebra;
    ext.L = mod.action.actor;
    ext.alpha_M = mod.action.target.alpha;
    ext.i = need_map(l.ws, iname).matrix;
    ext.pi = need_map(l.ws, piname).matrix;
    ext.sigma = need_map(l.ws, signame).matrix;
    return ext;
}

int run_extension_build(const std::string& file, const std::string& module,
                        const std::string& cocycle, bool pretty)
{
    Loaded l = load(file);
    const ModuleDef& mod = need_module(l.ws, module);
    Cochain w = cocycle_of_map(l.ws, mod, cocycle);
    json rep = envelope("extension build", &l);
    // A failed cocycle condition is a verdict, not an operational error.
    if (!is_cocycle(mod.action, w)) {
        rep["result"]["is_cocycle"] = false;
        return emit(rep, pretty, 0);
    }
    rep["result"]["is_cocycle"] = true;
    AbelianExtension ext = extension_from_cocycle(mod.action, w);
    rep["result"]["dim"] = ext.E.dim;
    json constants = json::array();
    for (int i = 0; i < ext.E.dim; ++i)
        for (int j = i + 1; j < ext.E.dim; ++j) {
            Vec v = ext.E.bracket_basis(i, j);
            if (!vec_is_zero(v)) {
                json e;
                e["i"] = i;
                e["j"] = j;
                e["value"] = jvec(v);
                constants.push_back(e);
            }
        }
    rep["result"]["brackets"] = constants;
    rep["result"]["alpha"] = jmat(ext.E.alpha);
    rep["result"]["validation"] =
        jext_report(validate_extension(ext, mod.action, mod.action.actor.alpha));
    return emit(rep, pretty, 0);
}

int run_extension_extract(const std::string& file, const std::string& module,
                          const std::string& Ename, const std::string& iname,
                          const std::string& piname, const std::string& signame, bool pretty)
{
    Loaded l = load(file);
    const ModuleDef& mod = need_module(l.ws, module);
    AbelianExtension ext = extension_from_names(l, mod, Ename, iname, piname, signame);
    json rep = envelope("extension extract", &l);
    rep["result"]["validation"] =
        jext_report(validate_extension(ext, mod.action, mod.action.actor.alpha));
    Cochain w = cocycle_from_extension(ext);
    rep["result"]["cocycle"] = jmat(w.values);
    rep["result"]["is_cocycle"] = is_cocycle(mod.action, w);
    return emit(rep, pretty, 0);
}

int run_extension_equiv(const std::string& file, const std::string& module,
                        const std::string& w1name, const std::string& w2name, bool pretty)
{
    Loaded l = load(file);
    const ModuleDef& mod = need_module(l.ws, module);
    Cochain w1 = cocycle_of_map(l.ws, mod, w1name);
    Cochain w2 = cocycle_of_map(l.ws, mod, w2name);
    AbelianExtension e1 = extension_from_cocycle(mod.action, w1);
    AbelianExtension e2 = extension_from_cocycle(mod.action, w2);
    json rep = envelope("extension equiv", &l);
    auto eq = equivalent_extensions(e1, e2, mod.action);
    rep["result"]["equivalent"] = eq.has_value();
    if (eq) {
        rep["result"]["phi"] = jmat(eq->phi);
        rep["result"]["theta"] = jmat(eq->theta.values);
    }
    return emit(rep, pretty, 0);
}

int run_extension_baer(const std::string& file, const std::string& module,
                       const std::string& op, const std::string& w1name,
                       const std::string& w2name, const std::string& scalar, bool pretty)
{
    Loaded l = load(file);
    const ModuleDef& mod = need_module(l.ws, module);
    Cochain w1 = cocycle_of_map(l.ws, mod, w1name);
    json rep = envelope("extension baer", &l);
    AbelianExtension e1 = extension_from_cocycle(mod.action, w1);
    if (op == "sum") {
        if (w2name.empty())
            throw UsageError("baer sum needs --cocycle2");
        Cochain w2 = cocycle_of_map(l.ws, mod, w2name);
        AbelianExtension e2 = extension_from_cocycle(mod.action, w2);
        AbelianExtension cat = baer_sum_categorical(e1, e2, mod.action);
        Cochain wc = cocycle_from_extension(cat);
        Cochain ws = baer_sum_cocycle(w1, w2);
        rep["result"]["cocycle_sum"] = jmat(ws.values);
        rep["result"]["categorical_class"] = jmat(wc.values);
        rep["result"]["routes_agree"] = cohomologous(mod.action, wc, ws).has_value();
    } else if (op == "scalar") {
        auto k = parse_rational(scalar);
        if (!k)
            throw UsageError("bad --scalar value");
        AbelianExtension cat = baer_scalar_categorical(e1, *k, mod.action);
        Cochain wc = cocycle_from_extension(cat);
        Cochain ws = baer_scalar_cocycle(w1, *k);
        rep["result"]["cocycle_scaled"] = jmat(ws.values);
        rep["result"]["categorical_class"] = jmat(wc.values);
        rep["result"]["routes_agree"] = cohomologous(mod.action, wc, ws).has_value();
    } else {
        throw UsageError("baer op must be 'sum' or 'scalar'");
    }
    return emit(rep, pretty, 0);
}

int run_extension_five_term(const std::string& file, const std::string& Nname,
                            const std::string& Ename, const std::string& xiname,
                            const std::string& piname, const std::string& signame,
                            const std::string& coeff, bool pretty)
{
    Loaded l = load(file);
    const ModuleDef& mod = need_module(l.ws, coeff);
    const AlgebraDef& N = need_algebra(l.ws, Nname);
    const AlgebraDef& E = need_algebra(l.ws, Ename);
    json rep = envelope("extension five-term", &l);
    FiveTermReport r = five_term_report(N.algebra, E.algebra, mod.action.actor,
                                        need_map(l.ws, xiname).matrix,
                                        need_map(l.ws, piname).matrix,
                                        need_map(l.ws, signame).matrix, mod.action);
    json& out = rep["result"];
    out["input_valid"] = r.input_valid;
    out["dim_der_L"] = r.dim_der_L;
    out["dim_der_E"] = r.dim_der_E;
    out["dim_hom_nab"] = r.dim_hom_nab;
    out["dim_h2_L"] = r.dim_h2_L;
    out["dim_h2_E"] = r.dim_h2_E;
    out["der_pi_injective"] = r.der_pi_injective;
    out["exact_at_der_E"] = r.exact_at_der_E;
    out["exact_at_hom"] = r.exact_at_hom;
    out["exact_at_h2"] = r.exact_at_h2;
    out["all"] = r.all();
    return emit(rep, pretty, 0);
}

CrossedModuleData crossed_from_names(const Loaded& l, const std::string& action,
                                     const std::string& muname)
{
    CrossedModuleData cm;
    cm.action = need_module(l.ws, action).action;
    cm.mu = need_map(l.ws, muname).matrix;
    return cm;
}

int run_crossed_check(const std::string& file, const std::string& action,
                      const std::string& muname, const std::string& flavor, bool pretty)
{
    Loaded l = load(file);
    CrossedModuleData cm = crossed_from_names(l, action, muname);
    CrossedFlavor fl = flavor == "alpha" ? CrossedFlavor::alpha : CrossedFlavor::standard;
    json rep = envelope("crossed check", &l);
    CrossedReport r = validate_crossed(cm, fl);
    json& out = rep["result"];
    out["flavor"] = flavor;
    out["action_valid"] = r.action.valid();
    out["mu_morphism"] = r.mu_morphism;
    out["equivariance"] = r.equivariance;
    out["peiffer"] = r.peiffer;
    out["valid"] = r.valid();
    out["image_is_ideal"] = r.image_is_ideal;
    out["kernel_central"] = r.kernel_central;
    out["coker_module"] = r.coker_module;
    out["semidirect_route"] =
        fl == CrossedFlavor::standard ? json(validate_crossed_via_semidirect(cm)) : json();
    return emit(rep, pretty, 0);
}

Cat1Data cat1_from_names(const Loaded& l, const std::string& Pname, const std::string& sub,
                         const std::string& sname, const std::string& tname)
{
    const AlgebraDef& P = need_algebra(l.ws, Pname);
    Cat1Data c;
    c.P = P.algebra;
    std::vector<Vec> gens;
    std::stringstream ss(sub);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto it = std::find(P.basis.begin(), P.basis.end(), item);
        if (it == P.basis.end())
            throw UsageError("'" + item + "' is not a basis name of " + Pname);
        Vec v(P.algebra.dim, Rat(0));
        v[it - P.basis.begin()] = 1;
        gens.push_back(v);
    }
    c.N = Subspace::span(P.algebra.dim, gens);
    c.s = need_map(l.ws, sname).matrix;
    c.t = need_map(l.ws, tname).matrix;
    return c;
}

int run_crossed_cat1(const std::string& file, const std::string& Pname, const std::string& sub,
                     const std::string& sname, const std::string& tname, bool pretty)
{
    Loaded l = load(file);
    Cat1Data c = cat1_from_names(l, Pname, sub, sname, tname);
    json rep = envelope("crossed cat1", &l);
    Cat1Report r = validate_cat1(c);
    json& out = rep["result"];
    out["n_subalgebra"] = r.n_subalgebra;
    out["s_morphism"] = r.s_morphism;
    out["t_morphism"] = r.t_morphism;
    out["maps_into_n"] = r.maps_into_n;
    out["fixes_n"] = r.fixes_n;
    out["kernels_commute"] = r.kernels_commute;
    out["valid"] = r.valid();
    return emit(rep, pretty, 0);
}

int run_crossed_functor_s(const std::string& file, const std::string& action,
                          const std::string& muname, bool pretty)
{
    Loaded l = load(file);
    CrossedModuleData cm = crossed_from_names(l, action, muname);
    json rep = envelope("crossed functor-s", &l);
    Cat1Data c = functor_S(cm);
    json& out = rep["result"];
    out["p_dim"] = c.P.dim;
    out["n_basis"] = jmat(c.N.basis());
    out["s"] = jmat(c.s);
    out["t"] = jmat(c.t);
    out["valid"] = validate_cat1(c).valid();
    return emit(rep, pretty, 0);
}

int run_crossed_functor_p(const std::string& file, const std::string& Pname,
                          const std::string& sub, const std::string& sname,
                          const std::string& tname, bool pretty)
{
    Loaded l = load(file);
    Cat1Data c = cat1_from_names(l, Pname, sub, sname, tname);
    json rep = envelope("crossed functor-p", &l);
    CrossedModuleData cm = functor_P(c);
    json& out = rep["result"];
    out["m_dim"] = cm.M().dim;
    out["l_dim"] = cm.L().dim;
    out["mu"] = jmat(cm.mu);
    out["valid_standard"] = validate_crossed(cm, CrossedFlavor::standard).valid();
    return emit(rep, pretty, 0);
}

int run_crossed_eta(const std::string& file, const std::string& module,
                    const std::string& action, const std::string& chiname,
                    const std::string& muname, const std::string& piname,
                    const std::string& signame, const std::string& rhoname, int trials,
                    bool pretty)
{
    Loaded l = load(file);
    AlphaCrossedExtension xi;
    xi.module = need_module(l.ws, module).action;
    xi.pn_action = need_module(l.ws, action).action;
    xi.chi = need_map(l.ws, chiname).matrix;
    xi.mu = need_map(l.ws, muname).matrix;
    xi.pi = need_map(l.ws, piname).matrix;
    xi.sigma = need_map(l.ws, signame).matrix;
    xi.rho = restrict_to_image(need_map(l.ws, rhoname).matrix, xi.mu);
    json rep = envelope("crossed eta", &l);
    AlphaCrossedExtensionReport vr = validate_alpha_crossed_extension(xi);
    json& out = rep["result"];
    out["extension_valid"] = vr.valid();
    if (vr.valid()) {
        EtaResult r = eta(xi);
        out["h"] = jmat(r.h.values);
        out["in_kernel"] = r.in_kernel;
        out["equivariant"] = r.equivariant;
        out["cocycle"] = r.cocycle;
        out["trivial_class"] = is_coboundary(xi.module, r.h).has_value();
        if (trials > 0) {
            EtaIndependenceReport ind = eta_section_independence(xi, trials);
            out["perturbations_checked"] = ind.trials_done;
            out["section_independent"] = ind.all_cohomologous;
        }
    }
    return emit(rep, pretty, 0);
}

int run_free(const std::string& generators, const std::string& alpha, int max_length,
             bool pretty)
{
    HomSet x;
    {
        std::stringstream ss(generators);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty())
                x.names.push_back(item);
    }
    if (x.names.empty())
        throw UsageError("--generators needs at least one name");
    x.alpha.assign(x.names.size(), -1);
    auto index_of = [&](const std::string& n) {
        for (std::size_t i = 0; i < x.names.size(); ++i)
            if (x.names[i] == n)
                return static_cast<int>(i);
        throw UsageError("unknown generator '" + n + "' in --alpha");
    };
    if (alpha == "id") {
        for (std::size_t i = 0; i < x.names.size(); ++i)
            x.alpha[i] = static_cast<int>(i);
    } else if (alpha == "zero") {
        // already -1
    } else {
        std::stringstream ss(alpha);
        std::string pair;
        while (std::getline(ss, pair, ',')) {
            auto colon = pair.find(':');
            if (colon == std::string::npos)
                throw UsageError("--alpha entries look like gen:image or gen:0");
            std::string from = pair.substr(0, colon), to = pair.substr(colon + 1);
            x.alpha[index_of(from)] = to == "0" ? -1 : index_of(to);
        }
    }
    json rep = envelope("free", nullptr);
    rep["input"]["generators"] = x.names;
    json al = json::array();
    for (int a : x.alpha)
        al.push_back(a < 0 ? std::string("0") : x.names[a]);
    rep["input"]["alpha"] = al;
    FreeTruncation f = truncated_free_homlie(x, max_length);
    json degrees = json::array();
    for (int n = 1; n <= max_length; ++n) {
        json row;
        row["length"] = n;
        row["word_count"] = f.words.count(n);
        row["relation_rank"] = f.relations[n - 1].dim();
        row["dimension"] = f.degree_dim(n);
        json words = json::array();
        for (int idx : f.basis_words[n - 1])
            words.push_back(f.words.name(x, n, idx));
        row["basis_words"] = words;
        degrees.push_back(row);
    }
    rep["result"]["degrees"] = degrees;
    rep["result"]["total_dimension"] = f.algebra.dim;
    AlgebraReport fr = validate_hom_lie(f.algebra);
    rep["result"]["valid"] = fr.valid();
    rep["result"]["multiplicative"] = fr.multiplicative;
    return emit(rep, pretty, 0);
}

int run_section(const std::string& file, const std::string& mapname, bool pretty)
{
    Loaded l = load(file);
    const MapDef& m = need_map(l.ws, mapname);
    if (m.wedge_source)
        throw UsageError("section of a wedge map is not defined");
    auto alpha_of = [&](const std::string& name) {
        if (const AlgebraDef* a = l.ws.find_algebra(name))
            return a->algebra.alpha;
        return need_module(l.ws, name).action.target.alpha;
    };
    Matrix ax = alpha_of(m.source);
    Matrix ay = alpha_of(m.target);
    json rep = envelope("section", &l);
    auto s = find_section(m.matrix, ax, ay);
    rep["result"]["map"] = mapname;
    rep["result"]["section"] = s ? json("present") : json("absent");
    if (s)
        rep["result"]["sigma"] = jmat(*s);
    return emit(rep, pretty, 0);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact computations with finite-dimensional Hom-Lie algebras"};
    app.require_subcommand(1);
    bool pretty = false;
    app.add_flag("--pretty", pretty, "indent the JSON report");

    std::string file, algebra, module, cocycle, cocycle2, scalar = "1";
    std::string Nn, En, xin, pin, sign, in_, coeff, action, mu, flavor = "standard";
    std::string sub, smap, tmap, chi, rho, generators, alpha = "id";
    int max_degree = 2, trials = 0, max_length = 3;

    auto* validate = app.add_subcommand("validate", "validate every object in a workspace");
    validate->add_option("file", file)->required();

    auto* cohom = app.add_subcommand("cohomology", "cochain and cohomology dimensions");
    cohom->add_option("file", file)->required();
    cohom->add_option("--algebra", algebra)->required();
    cohom->add_option("--module", module)->required();
    cohom->add_option("--max-degree", max_degree);

    auto* ext = app.add_subcommand("extension", "abelian extension computations");
    ext->require_subcommand(1);
    auto* build = ext->add_subcommand("build", "extension from a 2-cocycle");
    build->add_option("file", file)->required();
    build->add_option("--module", module)->required();
    build->add_option("--cocycle", cocycle)->required();
    auto* extract = ext->add_subcommand("extract", "cocycle of an extension");
    extract->add_option("file", file)->required();
    extract->add_option("--module", module)->required();
    extract->add_option("--E", En)->required();
    extract->add_option("--i", in_)->required();
    extract->add_option("--pi", pin)->required();
    extract->add_option("--sigma", sign)->required();
    auto* equiv = ext->add_subcommand("equiv", "equivalence of two cocycle classes");
    equiv->add_option("file", file)->required();
    equiv->add_option("--module", module)->required();
    equiv->add_option("--cocycle", cocycle)->required();
    equiv->add_option("--cocycle2", cocycle2)->required();
    auto* baer = ext->add_subcommand("baer", "Baer sum / scalar action, both routes");
    baer->add_option("file", file)->required();
    baer->add_option("--module", module)->required();
    std::string baer_op;
    baer->add_option("--op", baer_op)->required()->check(CLI::IsMember({"sum", "scalar"}));
    baer->add_option("--cocycle", cocycle)->required();
    baer->add_option("--cocycle2", cocycle2);
    baer->add_option("--scalar", scalar);
    auto* five = ext->add_subcommand("five-term", "five-term exact sequence report");
    five->add_option("file", file)->required();
    five->add_option("--N", Nn)->required();
    five->add_option("--E", En)->required();
    five->add_option("--xi", xin)->required();
    five->add_option("--pi", pin)->required();
    five->add_option("--sigma", sign)->required();
    five->add_option("--coefficients", coeff)->required();

    auto* crossed = app.add_subcommand("crossed", "crossed modules and cat1 objects");
    crossed->require_subcommand(1);
    auto* check = crossed->add_subcommand("check", "crossed module axioms");
    check->add_option("file", file)->required();
    check->add_option("--action", action)->required();
    check->add_option("--mu", mu)->required();
    check->add_option("--flavor", flavor)->check(CLI::IsMember({"standard", "alpha"}));
    auto* cat1 = crossed->add_subcommand("cat1", "cat1 axioms");
    cat1->add_option("file", file)->required();
    cat1->add_option("--algebra", algebra)->required();
    cat1->add_option("--sub", sub)->required();
    cat1->add_option("--s", smap)->required();
    cat1->add_option("--t", tmap)->required();
    auto* fs = crossed->add_subcommand("functor-s", "cat1 object of a crossed module");
    fs->add_option("file", file)->required();
    fs->add_option("--action", action)->required();
    fs->add_option("--mu", mu)->required();
    auto* fp = crossed->add_subcommand("functor-p", "crossed module of a cat1 object");
    fp->add_option("file", file)->required();
    fp->add_option("--algebra", algebra)->required();
    fp->add_option("--sub", sub)->required();
    fp->add_option("--s", smap)->required();
    fp->add_option("--t", tmap)->required();
    auto* eta_cmd = crossed->add_subcommand("eta", "3-cocycle of an alpha-crossed extension");
    eta_cmd->add_option("file", file)->required();
    eta_cmd->add_option("--module", module)->required();
    eta_cmd->add_option("--action", action)->required();
    eta_cmd->add_option("--chi", chi)->required();
    eta_cmd->add_option("--mu", mu)->required();
    eta_cmd->add_option("--pi", pin)->required();
    eta_cmd->add_option("--sigma", sign)->required();
    eta_cmd->add_option("--rho", rho)->required();
    eta_cmd->add_option("--trials", trials);

    auto* fr = app.add_subcommand("free", "degree table of the truncated free object");
    fr->add_option("--generators", generators)->required();
    fr->add_option("--alpha", alpha);
    fr->add_option("--max-length", max_length);

    auto* sec = app.add_subcommand("section", "equivariant section of a workspace map");
    sec->add_option("file", file)->required();
    sec->add_option("--map", module)->required();

    // let --pretty appear after a subcommand as well
    std::function<void(CLI::App*)> allow_fallthrough = [&](CLI::App* a) {
        for (CLI::App* s : a->get_subcommands({})) {
            s->fallthrough();
            allow_fallthrough(s);
        }
    };
    allow_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*validate)
            return run_validate(file, pretty);
        if (*cohom)
            return run_cohomology(file, algebra, module, max_degree, pretty);
        if (*build)
            return run_extension_build(file, module, cocycle, pretty);
        if (*extract)
            return run_extension_extract(file, module, En, in_, pin, sign, pretty);
        if (*equiv)
            return run_extension_equiv(file, module, cocycle, cocycle2, pretty);
        if (*baer)
            return run_extension_baer(file, module, baer_op, cocycle, cocycle2, scalar, pretty);
        if (*five)
            return run_extension_five_term(file, Nn, En, xin, pin, sign, coeff, pretty);
        if (*check)
            return run_crossed_check(file, action, mu, flavor, pretty);
        if (*cat1)
            return run_crossed_cat1(file, algebra, sub, smap, tmap, pretty);
        if (*fs)
            return run_crossed_functor_s(file, action, mu, pretty);
        if (*fp)
            return run_crossed_functor_p(file, algebra, sub, smap, tmap, pretty);
        if (*eta_cmd)
            return run_crossed_eta(file, module, action, chi, mu, pin, sign, rho, trials,
                                   pretty);
        if (*fr)
            return run_free(generators, alpha, max_length, pretty);
        if (*sec)
            return run_section(file, module, pretty);
        std::cerr << "no subcommand selected\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
