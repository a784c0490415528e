#include "qtrace/suite.hpp"

#include <cstdlib>
#include <limits>
#include <random>
#include <set>
#include <sstream>

namespace qtrace {

Index max_dim() {
    const char* env = std::getenv("QTRACE_MAX_DIM");
    if (!env || !*env) return 2000;
    try {
        long long v = std::stoll(env);
        if (v > 0) return static_cast<Index>(v);
    } catch (const std::exception&) {
    }
    throw Error("InvalidArgument", std::string("QTRACE_MAX_DIM must be a positive integer, got ") + env);
}

void check_dim(Index dim, const std::string& what) {
    const Index cap = max_dim();
    if (dim > cap)
        throw Error("DimensionCap", what + " has dimension " + std::to_string(dim) + " > QTRACE_MAX_DIM=" +
                                        std::to_string(cap));
}

nlohmann::json int_json(const Int& x) {
    if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
        return x.convert_to<long long>();
    return x.str();
}

PatternCheck odd_part_pattern(const AntisymNF& nf, int n, Index ones, Index rest, Index zeros) {
    PatternCheck c;
    c.ones = ones;
    c.rest = rest;
    c.zeros = zeros;
    c.pass = true;
    auto fail = [&](const std::string& why) {
        if (c.pass) c.detail = why;
        c.pass = false;
    };
    if (static_cast<Index>(nf.h.size()) != ones + rest)
        fail(std::to_string(nf.h.size()) + " invariants, expected " + std::to_string(ones + rest));
    if (nf.zero_count != zeros) fail(std::to_string(nf.zero_count) + " zero rows, expected " + std::to_string(zeros));
    const Int on = odd_part(Int(n));
    for (std::size_t i = 0; i < nf.h.size() && c.pass; ++i) {
        if (nf.h[i] % n != 0) {
            fail("h_" + std::to_string(i + 1) + " = " + nf.h[i].str() + " not divisible by n");
            break;
        }
        const Int z = odd_part(Int(nf.h[i] / n));
        const Int want = static_cast<Index>(i) < ones ? Int(1) : on;
        if (z != want) fail("Odd(z_" + std::to_string(i + 1) + ") = " + z.str() + ", expected " + want.str());
    }
    return c;
}

PatternCheck odd_part_pattern(const AntisymNF& nf, const SurfaceInvariants& s, int n, bool reduced) {
    const Index dim = 2 * static_cast<Index>(nf.h.size()) + nf.zero_count;
    if ((s.r - s.t) % 2 != 0) {
        PatternCheck c;
        c.detail = "r - t is odd";
        return c;
    }
    const Index ones = (s.r - s.t) / 2;
    Index zeros = static_cast<Index>(s.t) * (n - 1);
    if (reduced) zeros += static_cast<Index>(s.b - s.t) * (n / 2);
    const Index rest = (dim - zeros) / 2 - ones;
    return odd_part_pattern(nf, n, ones, rest, zeros);
}

namespace {

nlohmann::json pattern_json(const PatternCheck& c) {
    return {{"ones", c.ones}, {"odd_n", c.rest}, {"zeros", c.zeros}, {"pass", c.pass}, {"detail", c.detail}};
}

nlohmann::json nf_json(const AntisymNF& nf, int n) {
    nlohmann::json h = nlohmann::json::array(), odd = nlohmann::json::array();
    for (const auto& x : nf.h) {
        h.push_back(int_json(x));
        odd.push_back(x % n == 0 && x != 0 ? int_json(odd_part(Int(x / n))) : nlohmann::json(nullptr));
    }
    return {{"h", h}, {"odd_parts", odd}, {"zero_count", nf.zero_count}, {"verified", nf.verified}};
}

Int product_from_nf(const AntisymNF& nf, long long order) {
    Int p = 1;
    const Int o = order;
    for (const auto& h : nf.h) {
        const Int f = o / gcd_of<Int>(o, h);
        p *= f * f;
    }
    return p;
}

CheckEntry flag(const std::string& id, bool pass, const std::string& detail = "") {
    return {id, pass, pass ? "" : detail};
}

std::vector<CheckEntry> prefixed(const std::string& pre, const BlockReport& r) {
    std::vector<CheckEntry> out;
    for (auto e : r.entries) {
        e.id = pre + e.id;
        out.push_back(e);
    }
    return out;
}

// exponent of |Z^1(Z_k)| for a connected bordered surface: V - 1 + (2g + b - 1)
long long cocycle_exponent(const Triangulation& t, const SurfaceInvariants& s) {
    if (s.p_int == 0) return s.r;
    return static_cast<long long>(t.num_punctures) - 2 + 2LL * s.genus + s.b;
}

}  // namespace

nlohmann::json analyze(const SurfaceSpec& spec, const AnalyzeOptions& o) {
    nlohmann::json rep;
    rep["schema"] = kSchema;
    rep["reduced"] = o.reduced;
    rep["surface"] = spec.name;
    rep["spec"] = spec_to_json(spec);
    const Triangulation t = parse_surface(spec);
    const SurfaceInvariants inv = classify(t);
    const RootParams p = derive_params(o.n, o.order);
    rep["invariants"] = invariants_to_json(inv);
    rep["params"] = to_json(p);
    std::vector<std::string> warnings = p.warnings;
    const bool polygon = inv.genus == 0 && inv.b == 1 && inv.p_int == 0;
    rep["hypotheses"] = {{"essentially_bordered", inv.essentially_bordered},
                         {"no_interior_punctures", inv.no_interior_punctures},
                         {"triangulable", inv.triangulable},
                         {"odd_order", p.odd_order},
                         {"polygon", polygon}};
    if (o.reduced && !polygon && o.n > 3)
        warnings.push_back("reduced trace injectivity is only established for polygons when n > 3");

    nlohmann::json ledger = nlohmann::json::array();
    auto push = [&](const CheckEntry& e) { ledger.push_back({{"id", e.id}, {"pass", e.pass}, {"detail", e.detail}}); };

    nlohmann::json coh;
    for (long long d : {1, 2, 3, 5}) coh["cocycles_Z" + std::to_string(d)] = int_json(cocycle_count(t, d));
    rep["cohomology"] = coh;

    if (!inv.no_interior_punctures) {
        rep["trace"] = {{"status", "skipped"}, {"reason", "surface has interior punctures"}};
        rep["ledger"] = ledger;
        rep["warnings"] = warnings;
        return rep;
    }

    IntMat P;
    BlockReport blocks;
    nlohmann::json center;
    Int formula;
    if (o.reduced) {
        check_dim(reduced_vertex_count(inv, o.n), "reduced vertex set");
        const ReducedData d = reduced_data(t, o.n);
        rep["dimensions"] = {{"V_bar", d.nt.size()}, {"inner", d.a}, {"boundary", d.boundary.size()}};
        blocks = reduced_blocks(d);
        P = d.Pbar;
        if (p.odd_order) {
            const ReducedCenter c = reduced_center_check(d, p);
            const Int rank = *ambient_index(c.center);
            formula = reduced_rank_formula(inv, p);
            center = {{"status", "checked"},
                      {"basis", matrix_json(c.center.basis())},
                      {"lambda_z_basis", matrix_json(c.lat.lambda_z.basis())},
                      {"equal", c.equal},
                      {"boundary_in_center", c.boundary_in_center},
                      {"boundary_in_exact_kernel", c.boundary_in_exact_kernel},
                      {"rank", int_json(rank)},
                      {"rank_formula", int_json(formula)},
                      {"match", rank == formula}};
            push(flag("center_equal", c.equal, "kernel of P-bar mod m'' differs from Lambda-bar_z"));
            push(flag("rank_formula", rank == formula, "rank " + rank.str() + " vs formula " + formula.str()));
        }
    } else {
        check_dim(static_cast<Index>(o.n * o.n - 1) * inv.r, "vertex set V");
        const ExtendedData d = extended_data(t, o.n);
        rep["dimensions"] = {{"V", d.V.size()}, {"V_prime", d.Vp.size()}, {"V_star", d.nt.size()}};
        blocks = verify_blocks(d);
        P = d.P;
        if (p.odd_order) {
            const SkeinCenterLattices s = skein_center_lattices(d, p);
            const Lattice c = center_lattice(d.P, p.order);
            const bool equal = lattice_equal(c, s.lambda_z);
            const Int rank = *ambient_index(c);
            formula = rank_formula(inv, p);
            center = {{"status", "checked"},
                      {"basis", matrix_json(c.basis())},
                      {"lambda_z_basis", matrix_json(s.lambda_z.basis())},
                      {"equal", equal},
                      {"rank", int_json(rank)},
                      {"rank_formula", int_json(formula)},
                      {"match", rank == formula}};
            push(flag("center_equal", equal, "kernel of P mod m'' differs from Lambda_z"));
            push(flag("rank_formula", rank == formula, "rank " + rank.str() + " vs formula " + formula.str()));
        }
    }
    for (const auto& e : blocks.entries) push(e);
    rep["blocks"] = to_json(blocks);
    if (!p.odd_order) center = {{"status", "skipped"}, {"reason", "even order"}};

    const AntisymNF nf = antisym_normal_form(P);
    nlohmann::json nfj = nf_json(nf, o.n);
    const PatternCheck pat = odd_part_pattern(nf, inv, o.n, o.reduced);
    nfj["pattern"] = pattern_json(pat);
    push(flag("normal_form_verified", nf.verified, "X^T P X differs from the block form"));
    push(flag("odd_part_pattern", pat.pass, pat.detail));
    if (p.odd_order) {
        const Int sq = product_from_nf(nf, p.order);
        const Int pi = int_sqrt_exact(sq);
        center["pi_degree"] = int_json(pi);
        nfj["squared_product"] = int_json(sq);
        const bool ok = center.contains("rank") && int_json(sq) == center["rank"];
        push(flag("squared_product_rank", ok, "normal form product " + sq.str() + " differs from the lattice index"));
    }
    rep["center"] = center;
    rep["normal_form"] = nfj;
    rep["ledger"] = ledger;
    rep["warnings"] = warnings;
    bool all = true;
    for (const auto& e : ledger) all = all && e["pass"].get<bool>();
    rep["all_pass"] = all;
    return rep;
}

bool VerifyResult::ok() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

nlohmann::json to_json(const VerifyResult& v) {
    nlohmann::json checks = nlohmann::json::array(), failures = nlohmann::json::array(),
                   skipped = nlohmann::json::array();
    for (const auto& c : v.checks) {
        checks.push_back({{"id", c.id}, {"pass", c.pass}, {"detail", c.detail}});
        if (!c.pass) failures.push_back(c.id);
    }
    for (const auto& [id, why] : v.skipped) skipped.push_back({{"id", id}, {"reason", why}});
    return {{"schema", kSchema}, {"ok", v.ok()}, {"checks", checks}, {"failures", failures}, {"skipped", skipped}};
}

CheckEntry torus_commutation(const IntMat& P, int pairs, std::uint64_t seed) {
    const QuantumTorus T(P);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(-3, 3);
    for (int it = 0; it < pairs; ++it) {
        Exponent a(T.dim()), b(T.dim());
        for (auto& x : a) x = dist(rng);
        for (auto& x : b) x = dist(rng);
        const TorusMonomial ab = T.mul(T.weyl(a), T.weyl(b));
        const TorusMonomial ba = T.scaled(T.mul(T.weyl(b), T.weyl(a)), 2 * T.pairing(a, b));
        if (!(ab == ba)) return {"torus_commutation", false, "pair " + std::to_string(it)};
    }
    return {"torus_commutation", true, ""};
}

CheckEntry torus_inverse(const IntMat& P, int samples, std::uint64_t seed) {
    const QuantumTorus T(P);
    std::mt19937_64 rng(seed + 1);
    std::uniform_int_distribution<int> dist(-3, 3);
    const TorusMonomial one = T.weyl(Exponent(T.dim(), 0));
    for (int it = 0; it < samples; ++it) {
        Exponent a(T.dim()), na(T.dim());
        for (Index i = 0; i < T.dim(); ++i) {
            a[i] = dist(rng);
            na[i] = -a[i];
        }
        if (!(T.mul(T.weyl(a), T.weyl(na)) == one)) return {"torus_inverse", false, "sample " + std::to_string(it)};
    }
    return {"torus_inverse", true, ""};
}

VerifyResult verify(const SurfaceSpec& spec, int n, const std::vector<long long>& orders, std::uint64_t seed) {
    VerifyResult v;
    const Triangulation t = parse_surface(spec);
    const SurfaceInvariants inv = classify(t);
    auto add = [&](const CheckEntry& e) { v.checks.push_back(e); };
    auto skip = [&](const std::string& id, const std::string& why) { v.skipped.emplace_back(id, why); };

    if (is_connected(t) && inv.b > 0) {
        const long long e = cocycle_exponent(t, inv);
        for (long long d : {1, 2, 3, 5}) {
            const Int got = cocycle_count(t, d), want = int_pow(Int(d), e);
            add(flag("cocycles_Z" + std::to_string(d), got == want, got.str() + " vs " + want.str()));
        }
    } else {
        skip("cocycles", "closed form needs a connected surface with boundary");
    }

    if (!inv.no_interior_punctures) {
        skip("trace", "surface has interior punctures");
        return v;
    }
    check_dim(static_cast<Index>(n * n - 1) * inv.r, "vertex set V");

    const ExtendedData d = extended_data(t, n);
    for (const auto& e : prefixed("ext.", verify_blocks(d))) add(e);
    const AntisymNF nf = antisym_normal_form(d.P);
    add(flag("ext.normal_form_verified", nf.verified));
    const PatternCheck pat = odd_part_pattern(nf, inv, n, false);
    add(flag("ext.odd_part_pattern", pat.pass, pat.detail));
    add(torus_commutation(d.P, 1000, seed));
    add(torus_inverse(d.P, 100, seed));
    bool all_odd = true;
    for (int r : inv.r_i) all_odd = all_odd && r % 2 == 1;
    if (all_odd) add(flag("generic_center_trivial", generic_center(d.P).rank() == 0, "integer kernel of P is nonzero"));

    std::set<long long> ks{3, 5, 9};
    std::optional<ReducedData> red;
    AntisymNF rnf;
    try {
        check_dim(reduced_vertex_count(inv, n), "reduced vertex set");
        red = reduced_data(t, n);
    } catch (const Error& e) {
        if (std::string(e.code()) == "DimensionCap") throw;
        skip("reduced", e.what());
    }
    if (red) {
        for (const auto& e : prefixed("reduced.", reduced_blocks(*red))) add(e);
        rnf = antisym_normal_form(red->Pbar);
        const PatternCheck rp = odd_part_pattern(rnf, inv, n, true);
        add(flag("reduced.odd_part_pattern", rp.pass, rp.detail));
    }

    for (long long order : orders) {
        const RootParams p = derive_params(n, order);
        const std::string tag = "@" + std::to_string(order);
        if (!p.odd_order) {
            skip("theorems" + tag, "even order");
            continue;
        }
        ks.insert(p.m_prime);
        const SkeinCenterLattices s = skein_center_lattices(d, p);
        const Lattice c = center_lattice(d.P, order);
        add(flag("ext.center_equal" + tag, lattice_equal(c, s.lambda_z)));
        const Int rank = *ambient_index(c), f = rank_formula(inv, p);
        add(flag("ext.rank_formula" + tag, rank == f, rank.str() + " vs " + f.str()));
        const Int sq = product_from_nf(nf, order);
        add(flag("ext.squared_product" + tag, sq == rank, sq.str() + " vs " + rank.str()));
        if (red) {
            const ReducedCenter rc = reduced_center_check(*red, p);
            add(flag("reduced.center_equal" + tag, rc.equal));
            add(flag("reduced.boundary_in_center" + tag, rc.boundary_in_center));
            const Int rr = *ambient_index(rc.center), rf = reduced_rank_formula(inv, p);
            add(flag("reduced.rank_formula" + tag, rr == rf, rr.str() + " vs " + rf.str()));
            const Int rsq = product_from_nf(rnf, order);
            add(flag("reduced.squared_product" + tag, rsq == rr, rsq.str() + " vs " + rr.str()));
        }
        const ReversalReport rev = reversal_properties(n, p.m_prime, seed);
        add(flag("reversal" + tag, rev.all(), to_json(rev).dump()));
    }
    for (long long k : ks)
        add(flag("exact_sequence@k=" + std::to_string(k), exact_sequence_check(t, n, k)));
    return v;
}

nlohmann::json normal_form_report(const IntMat& P) {
    const AntisymNF nf = antisym_normal_form(P);
    nlohmann::json h = nlohmann::json::array();
    for (const auto& x : nf.h) h.push_back(int_json(x));
    return {{"schema", kSchema},
            {"h", h},
            {"zero_count", nf.zero_count},
            {"verified", nf.verified},
            {"X", matrix_json(nf.X)},
            {"form", matrix_json(nf.form)}};
}

Grid parse_grid(const std::string& text) {
    Grid g;
    std::stringstream parts(text);
    std::string part;
    while (std::getline(parts, part, ';')) {
        const auto eq = part.find('=');
        if (eq == std::string::npos) throw Error("InvalidArgument", "grid part without '=': " + part);
        const std::string key = part.substr(0, eq);
        std::stringstream vals(part.substr(eq + 1));
        std::string v;
        while (std::getline(vals, v, ',')) {
            if (v.empty()) continue;
            if (key == "n")
                g.n.push_back(std::stoi(v));
            else if (key == "order")
                g.order.push_back(std::stoll(v));
            else
                throw Error("InvalidArgument", "unknown grid key " + key);
        }
    }
    if (g.n.empty() || g.order.empty()) throw Error("InvalidArgument", "grid needs both n and order");
    return g;
}

}  // namespace qtrace
