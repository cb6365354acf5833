#include "k3m/catalog.hpp"

#include "k3m/discform.hpp"
#include "k3m/embed.hpp"
#include "k3m/fricke.hpp"
#include "k3m/json_io.hpp"
#include "k3m/mirror.hpp"
#include "k3m/toric.hpp"

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <stdexcept>
#include <thread>

namespace k3m {

namespace detail {
extern const char* const arnold_table_json_text;
}

namespace {

using ojson = nlohmann::ordered_json;

ojson jint(const Int& v) {
    if (v.fits_slong_p()) return ojson(static_cast<long long>(v.get_si()));
    return ojson(v.get_str());
}

ojson jvec(const VecZ& v) {
    ojson a = ojson::array();
    for (const Int& x : v) a.push_back(jint(x));
    return a;
}

ojson jmat(const MatZ& m) {
    ojson rows = ojson::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ojson row = ojson::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(jint(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<ArnoldRow> load_arnold_rows() {
    ojson j = ojson::parse(detail::arnold_table_json_text, nullptr, false);
    if (j.is_discarded() || !j.contains("rows"))
        throw std::logic_error("embedded duality table asset is corrupt");
    std::vector<ArnoldRow> rows;
    for (const auto& r : j["rows"]) {
        ArnoldRow row;
        row.name = r.at("name").get<std::string>();
        for (int i = 0; i < 3; ++i) {
            row.triple[i] = r.at("triple")[i].get<int>();
            row.weights[i] = r.at("weights")[i].get<int>();
            row.dual_triple[i] = r.at("dual_triple")[i].get<int>();
        }
        row.degree = r.at("degree").get<int>();
        if (!r.at("d0").is_null()) row.d0 = r.at("d0").get<int>();
        rows.push_back(std::move(row));
    }
    if (rows.size() != 14) throw std::logic_error("embedded duality table must have 14 rows");
    for (const ArnoldRow& row : rows) {
        auto dual = std::find_if(rows.begin(), rows.end(), [&](const ArnoldRow& o) {
            return o.triple == row.dual_triple;
        });
        if (dual == rows.end() || dual->dual_triple != row.triple)
            throw std::logic_error("duality table row " + row.name + " breaks the involution");
        int rank = row.triple[0] + row.triple[1] + row.triple[2] - 2;
        int dual_rank = row.dual_triple[0] + row.dual_triple[1] + row.dual_triple[2] - 2;
        if (rank + dual_rank != 20)
            throw std::logic_error("duality table row " + row.name + " breaks the rank sum");
        if (1 + row.weights[0] + row.weights[1] + row.weights[2] != row.degree)
            throw std::logic_error("duality table row " + row.name + " breaks the degree sum");
    }
    return rows;
}

struct ClaimOutcome {
    std::string status;
    ojson evidence;
};

struct Claim {
    std::string id;
    std::string paper_ref;
    std::function<ClaimOutcome()> run;
};

ClaimOutcome graded(bool ok, ojson evidence) {
    return {ok ? "pass" : "fail", std::move(evidence)};
}

Lattice u_e8_e8() { return direct_sum(direct_sum(lat::U(), lat::E(8)), lat::E(8)); }

// U + E8 + E8 + <-2n>, the mirror-side model of the degree-2n family.
Lattice degree_model(const Int& n) { return direct_sum(u_e8_e8(), lat::diag(-2 * n)); }

// E8(2) + U(2), the invariant lattice of the Enriques involution.
Lattice enriques_m() { return direct_sum(rescale(lat::E(8), 2), lat::U_scaled(2)); }

// Ambient K3 lattice basis layout: U at 0..1, U at 2..3, U at 4..5,
// E8 at 6..13, E8 at 14..21.

// Columns: the rank-10 Enriques lattice placed diagonally across the two E8
// blocks and the first two hyperbolic planes.
MatZ enriques_embedding_columns() {
    MatZ e(22, 10);
    for (std::size_t j = 0; j < 8; ++j) {
        e.at(6 + j, j) = 1;
        e.at(14 + j, j) = 1;
    }
    e.at(0, 8) = 1;
    e.at(2, 8) = 1;
    e.at(1, 9) = 1;
    e.at(3, 9) = 1;
    return e;
}

Claim strange_duality_claim(const ArnoldRow row) {
    return Claim{
        "sd/" + row.name, "strange-duality-table", [row]() {
            const auto& rows = arnold_table();
            auto dual = std::find_if(rows.begin(), rows.end(), [&](const ArnoldRow& o) {
                return o.triple == row.dual_triple;
            });
            bool involution = dual != rows.end() && dual->dual_triple == row.triple;
            Lattice t = lat::T(row.triple[0], row.triple[1], row.triple[2]);
            Lattice td = lat::T(row.dual_triple[0], row.dual_triple[1], row.dual_triple[2]);
            bool rank_sum = t.rank() + td.rank() == 20;
            bool dual_forms = k3_dual(t, td);
            bool degree_sum = 1 + row.weights[0] + row.weights[1] + row.weights[2] == row.degree;
            ojson ev{{"dual", involution ? dual->name : "missing"},
                     {"rank_sum", static_cast<long long>(t.rank() + td.rank())},
                     {"abs_det", jint(abs(t.determinant()))},
                     {"opposite_discriminants", dual_forms},
                     {"degree_sum_ok", degree_sum}};
            if (row.d0) {
                WeightSystem ws = strange_duality_weights(
                    {Int(row.triple[0]), Int(row.triple[1]), Int(row.triple[2])}, Int(*row.d0));
                ev["weight_system"] = jvec({ws.w[0], ws.w[1], ws.w[2], ws.w[3]});
            }
            return graded(involution && rank_sum && dual_forms && degree_sum, std::move(ev));
        }};
}

Claim d9_genus_claim() {
    return Claim{"identity/d9-genus", "lattice-identity:degree-8", []() {
                     Lattice a = direct_sum(u_e8_e8(), lat::diag(-4));
                     Lattice b = direct_sum(direct_sum(lat::U(), lat::E(8)), lat::D(9));
                     GenusComparison gc = genus_equal(a, b);
                     ojson ev{{"genus_equal", gc.equal},
                              {"promoted", gc.promoted},
                              {"discriminant", ojson::parse(to_json(discriminant_form(a)))}};
                     return graded(gc.equal && gc.promoted, std::move(ev));
                 }};
}

Claim e7_a2_genus_claim() {
    return Claim{"identity/e7-a2-genus", "lattice-identity:degree-12", []() {
                     Lattice a = direct_sum(u_e8_e8(), lat::diag(-6));
                     Lattice b = direct_sum(direct_sum(lat::U(), lat::E(8)),
                                            direct_sum(lat::E(7), lat::A(2)));
                     GenusComparison gc = genus_equal(a, b);
                     ojson ev{{"genus_equal", gc.equal}, {"promoted", gc.promoted}};
                     return graded(gc.equal && gc.promoted, std::move(ev));
                 }};
}

Claim overlattice_claim() {
    return Claim{
        "identity/overlattice-z3", "lattice-identity:order-3-glue", []() {
            Lattice big = direct_sum(direct_sum(lat::E(6), lat::E(6)),
                                     direct_sum(lat::A(5), lat::U()));
            Lattice target = direct_sum(u_e8_e8(), lat::diag(-6));
            FiniteQuadraticForm a = discriminant_form(big);
            FiniteQuadraticForm want = discriminant_form(target);
            bool found = false;
            FqfElem glue;
            for (const FqfElem& x : isotropic_elements(a)) {
                if (a.elem_order(x) != 3) continue;
                FiniteQuadraticForm q = quotient_form(a, {x});
                if (q.group_order() == want.group_order() && are_isomorphic(q, want)) {
                    found = true;
                    glue = x;
                    break;
                }
            }
            bool signatures = big.signature() == target.signature();
            ojson ev{{"index", 3},
                     {"ambient_order", jint(a.group_order())},
                     {"quotient_order", jint(want.group_order())},
                     {"signatures_match", signatures}};
            if (found) ev["glue_generator"] = jvec(glue);
            return graded(found && signatures, std::move(ev));
        }};
}

Claim mirror_chain_claim(int n) {
    char id[32];
    std::snprintf(id, sizeof id, "mirror/chain-n%02d", n);
    return Claim{
        id, "mirror-construction:degree-2n", [n]() {
            Lattice l = lat::k3();
            VecZ f_amb(22, Int(0));
            f_amb[0] = 1;

            // Forward: <2n> spanned by f3 + n g3 inside the third plane.
            MatZ cols(22, 1);
            cols.at(4, 0) = 1;
            cols.at(5, 0) = n;
            MirrorResult fwd = mirror_of_polarization(lat::diag(2 * n), Embedding{l, cols}, f_amb);
            GenusComparison g1 = genus_equal(fwd.check_lattice, degree_model(n));

            // Backward: the computed mirror genus placed in its standard
            // coordinates, with <-2n> spanned by f3 - n g3.
            MatZ back(22, 19);
            back.at(2, 0) = 1;
            back.at(3, 1) = 1;
            for (std::size_t j = 0; j < 8; ++j) {
                back.at(6 + j, 2 + j) = 1;
                back.at(14 + j, 10 + j) = 1;
            }
            back.at(4, 18) = 1;
            back.at(5, 18) = -n;
            MirrorResult bwd = mirror_of_polarization(degree_model(n), Embedding{l, back}, f_amb);
            GenusComparison g2 = genus_equal(bwd.check_lattice, lat::diag(2 * n));

            bool ok = g1.equal && g2.equal && fwd.m == 1 && bwd.m == 1 &&
                      fwd.check_lattice.rank() == 19 && bwd.check_lattice.rank() == 1;
            ojson ev{{"n", n},
                     {"m", jint(fwd.m)},
                     {"mirror_rank", static_cast<long long>(fwd.check_lattice.rank())},
                     {"mirror_genus_equal", g1.equal},
                     {"double_mirror_genus_equal", g2.equal},
                     {"witness_found", fwd.splitting_witness.has_value()}};
            return graded(ok, std::move(ev));
        }};
}

Claim enriques_complement_claim() {
    return Claim{"enriques/complement", "enriques:anti-invariant-lattice", []() {
                     ComplementResult cr = orthogonal_complement(
                         Embedding{lat::k3(), enriques_embedding_columns()});
                     Lattice model = direct_sum(enriques_m(), lat::U());
                     GenusComparison gc = genus_equal(cr.lattice, model);
                     ojson ev{{"rank", static_cast<long long>(cr.lattice.rank())},
                              {"genus_equal", gc.equal},
                              {"promoted", gc.promoted},
                              {"primitive", cr.input_was_primitive}};
                     return graded(gc.equal && cr.lattice.rank() == 12 && cr.input_was_primitive,
                                   std::move(ev));
                 }};
}

Claim enriques_self_mirror_claim() {
    return Claim{"enriques/self-mirror", "enriques:mirror", []() {
                     Lattice l = lat::k3();
                     VecZ f_amb(22, Int(0));
                     f_amb[4] = 1;  // isotropic vector in the free third plane
                     MirrorResult mr = mirror_of_polarization(
                         enriques_m(), Embedding{l, enriques_embedding_columns()}, f_amb);
                     GenusComparison gc = genus_equal(mr.check_lattice, enriques_m());
                     ojson ev{{"m", jint(mr.m)},
                              {"mirror_rank", static_cast<long long>(mr.check_lattice.rank())},
                              {"self_mirror", gc.equal}};
                     return graded(gc.equal && mr.m == 1, std::move(ev));
                 }};
}

Claim enriques_u2_vector_claim() {
    return Claim{"enriques/u2-vector", "enriques:divisor-2-mirror", []() {
                     Lattice l = lat::k3();
                     VecZ f_amb(22, Int(0));
                     f_amb[0] = 1;  // f1 - f2, orthogonal to the diagonal plane
                     f_amb[2] = -1;
                     MirrorResult mr = mirror_of_polarization(
                         enriques_m(), Embedding{l, enriques_embedding_columns()}, f_amb);
                     Lattice model = direct_sum(lat::U(), rescale(lat::E(8), 2));
                     GenusComparison gc = genus_equal(mr.check_lattice, model);
                     ojson ev{{"m", jint(mr.m)},
                              {"mirror_rank", static_cast<long long>(mr.check_lattice.rank())},
                              {"genus_equal", gc.equal}};
                     return graded(gc.equal && mr.m == 2, std::move(ev));
                 }};
}

Claim kummer_base_change_claim() {
    return Claim{
        "kummer/base-change", "kummer:gram-base-change", []() {
            const long bound = 3;
            MatZ g = direct_sum(lat::U_scaled(2), lat::diag(-4)).gram();
            MatZ target{{0, 2, 2}, {2, 0, 2}, {2, 2, 0}};

            auto pair = [&](const VecZ& x, const VecZ& y) {
                Int s = 0;
                for (std::size_t i = 0; i < 3; ++i)
                    for (std::size_t j = 0; j < 3; ++j) s += x[i] * g.at(i, j) * y[j];
                return s;
            };

            std::vector<VecZ> isotropic;
            for (long a = -bound; a <= bound; ++a)
                for (long b = -bound; b <= bound; ++b)
                    for (long c = -bound; c <= bound; ++c) {
                        VecZ v{Int(a), Int(b), Int(c)};
                        if (vec_is_zero(v)) continue;
                        if (pair(v, v) == 0) isotropic.push_back(v);
                    }

            for (const VecZ& c1 : isotropic)
                for (const VecZ& c2 : isotropic) {
                    if (pair(c1, c2) != 2) continue;
                    for (const VecZ& c3 : isotropic) {
                        if (pair(c1, c3) != 2 || pair(c2, c3) != 2) continue;
                        MatZ p(3, 3);
                        p.set_col(0, c1);
                        p.set_col(1, c2);
                        p.set_col(2, c3);
                        Int d = det(p);
                        if (d != 1 && d != -1) continue;
                        if (!(p.transpose() * g * p == target)) continue;
                        ojson ev{{"base_change", jmat(p)}, {"det", jint(d)}};
                        return ClaimOutcome{"pass", std::move(ev)};
                    }
                }
            ojson ev{{"bound", bound}, {"note", "no base change found within the entry bound"}};
            return ClaimOutcome{"unknown", std::move(ev)};
        }};
}

Claim wedge_claim(int n) {
    char id[32];
    std::snprintf(id, sizeof id, "wedge/n%02d", n);
    return Claim{id, "kummer:wedge-square-identity", [n]() {
                     bool ok = kummer_wedge_identity(n);
                     return graded(ok, ojson{{"n", n}, {"holds", ok}});
                 }};
}

Claim wedge_symbolic_claim() {
    return Claim{"wedge/symbolic", "kummer:wedge-square-identity", []() {
                     bool ok = kummer_wedge_identity_symbolic();
                     return graded(ok, ojson{{"indeterminates", "t, n"}, {"holds", ok}});
                 }};
}

Claim fricke_counts_claim(int n) {
    char id[32];
    std::snprintf(id, sizeof id, "fricke/n%02d", n);
    return Claim{
        id, "modular-curve-counts", [n]() {
            static const long expected_orbit[10] = {1, 1, 1, 2, 1, 1, 1, 2, 2, 1};
            static const long expected_cusp[10] = {1, 1, 1, 2, 1, 2, 1, 2, 2, 2};
            static const long expected_excluded[10] = {1, 1, 1, 1, 2, 2, 2, 2, 2, 2};
            Int orbit = isotropic_orbit_count(n);
            Int cusp = cusp_count(n);
            Int excluded = excluded_count(n);
            Int h = class_number(-4 * Int(n));
            Int h_oracle = class_number_reduction_oracle(-4 * Int(n));
            bool ok = orbit == expected_orbit[n - 1] && cusp == expected_cusp[n - 1] &&
                      excluded == expected_excluded[n - 1] && h == h_oracle;
            ojson ev{{"n", n},
                     {"orbit_count", jint(orbit)},
                     {"cusp_count", jint(cusp)},
                     {"excluded_count", jint(excluded)},
                     {"class_number", jint(h)},
                     {"class_number_oracle_agrees", h == h_oracle}};
            return graded(ok, std::move(ev));
        }};
}

Claim toric_claim(const std::string& id, std::array<long, 4> w, long expected_order,
                  std::vector<long> expected_factors) {
    return Claim{
        "toric/" + id, "weight-system-group", [w, expected_order, expected_factors]() {
            WeightSystem ws({Int(w[0]), Int(w[1]), Int(w[2]), Int(w[3])});
            Int order = pi_group_order(ws);
            PiGroup pg = pi_group_structure(ws);
            Int product = 1;
            for (const Int& f : pg.invariant_factors) product *= f;
            bool factors_match = pg.invariant_factors.size() == expected_factors.size();
            for (std::size_t i = 0; factors_match && i < expected_factors.size(); ++i)
                factors_match = pg.invariant_factors[i] == expected_factors[i];
            PolarDualResult dual = polar_dual(delta_of_weights(ws));
            bool ok = order == expected_order && pg.order == order && product == order &&
                      factors_match && dual.reflexive;
            ojson ev{{"weights", jvec({Int(w[0]), Int(w[1]), Int(w[2]), Int(w[3])})},
                     {"order", jint(order)},
                     {"invariant_factors", jvec(pg.invariant_factors)},
                     {"reflexive", dual.reflexive}};
            return graded(ok, std::move(ev));
        }};
}

Claim picard20_claim(const std::string& id, Lattice l, long expected_det) {
    return Claim{"picard20/" + id, "rank-20-degeneration", [l, expected_det]() {
                     Signature sig = l.signature();
                     Int d = l.determinant();
                     bool ok = l.rank() == 20 && sig.pos == 1 && sig.neg == 19 &&
                               d == expected_det && l.is_even();
                     ojson ev{{"rank", static_cast<long long>(l.rank())},
                              {"det", jint(d)},
                              {"signature", ojson::array({1, 19})},
                              {"even", l.is_even()}};
                     return graded(ok, std::move(ev));
                 }};
}

std::vector<Claim> all_claims() {
    std::vector<Claim> claims;
    for (const ArnoldRow& row : arnold_table()) claims.push_back(strange_duality_claim(row));
    claims.push_back(d9_genus_claim());
    claims.push_back(e7_a2_genus_claim());
    claims.push_back(overlattice_claim());
    for (int n = 1; n <= 10; ++n) claims.push_back(mirror_chain_claim(n));
    claims.push_back(enriques_complement_claim());
    claims.push_back(enriques_self_mirror_claim());
    claims.push_back(enriques_u2_vector_claim());
    claims.push_back(kummer_base_change_claim());
    for (int n = 1; n <= 10; ++n) claims.push_back(wedge_claim(n));
    claims.push_back(wedge_symbolic_claim());
    for (int n = 1; n <= 10; ++n) claims.push_back(fricke_counts_claim(n));
    claims.push_back(toric_claim("w1-1-1-1", {1, 1, 1, 1}, 16, {4, 4}));
    claims.push_back(toric_claim("w1-3-8-12", {1, 3, 8, 12}, 2, {2}));
    claims.push_back(toric_claim("w1-6-14-21", {1, 6, 14, 21}, 1, {}));
    claims.push_back(picard20_claim("a2", direct_sum(u_e8_e8(), lat::A(2)), -3));
    claims.push_back(picard20_claim(
        "double-m2", direct_sum(u_e8_e8(), direct_sum(lat::diag(-2), lat::diag(-2))), -4));
    std::sort(claims.begin(), claims.end(),
              [](const Claim& a, const Claim& b) { return a.id < b.id; });
    return claims;
}

VerificationReport run_claim(const Claim& c) {
    auto t0 = std::chrono::steady_clock::now();
    ClaimOutcome out;
    try {
        out = c.run();
    } catch (const std::exception& e) {
        out.status = "fail";
        out.evidence = ojson{{"error", e.what()}};
    }
    auto elapsed = std::chrono::steady_clock::now() - t0;
    long long ms = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    return VerificationReport{c.id, c.paper_ref, out.status, out.evidence.dump(), ms};
}

std::vector<VerificationReport> run_claims(std::vector<Claim> claims, int jobs) {
    std::vector<VerificationReport> reports(claims.size());
    if (jobs <= 1 || claims.size() <= 1) {
        for (std::size_t i = 0; i < claims.size(); ++i) reports[i] = run_claim(claims[i]);
        return reports;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= claims.size()) return;
            reports[i] = run_claim(claims[i]);
        }
    };
    std::vector<std::thread> pool;
    std::size_t count = std::min<std::size_t>(jobs, claims.size());
    for (std::size_t i = 0; i < count; ++i) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    return reports;
}

}  // namespace

const std::string& arnold_table_json() {
    static const std::string text = detail::arnold_table_json_text;
    return text;
}

const std::vector<ArnoldRow>& arnold_table() {
    static const std::vector<ArnoldRow> rows = load_arnold_rows();
    return rows;
}

std::vector<VerificationReport> verify_strange_duality() { return verify_catalog("sd/"); }

std::vector<VerificationReport> verify_named_examples() {
    std::vector<Claim> picked;
    for (Claim& c : all_claims())
        if (c.id.rfind("sd/", 0) != 0) picked.push_back(std::move(c));
    return run_claims(std::move(picked), 1);
}

std::vector<VerificationReport> verify_catalog(const std::string& only, int jobs) {
    std::vector<Claim> picked;
    for (Claim& c : all_claims())
        if (only.empty() || c.id.rfind(only, 0) == 0) picked.push_back(std::move(c));
    return run_claims(std::move(picked), jobs);
}

ReportTotals report_totals(const std::vector<VerificationReport>& reports) {
    ReportTotals t;
    for (const VerificationReport& r : reports) {
        if (r.status == "pass")
            ++t.pass;
        else if (r.status == "fail")
            ++t.fail;
        else
            ++t.unknown;
    }
    return t;
}

std::string report_to_json(const std::vector<VerificationReport>& reports) {
    ojson claims = ojson::array();
    for (const VerificationReport& r : reports) {
        ojson ev = ojson::parse(r.evidence, nullptr, false);
        if (ev.is_discarded()) ev = ojson{{"raw", r.evidence}};
        claims.push_back(ojson{{"id", r.id},
                               {"paper_ref", r.paper_ref},
                               {"status", r.status},
                               {"evidence", std::move(ev)},
                               {"ms", r.ms}});
    }
    ReportTotals t = report_totals(reports);
    ojson j{{"claims", std::move(claims)},
            {"summary", ojson{{"pass", t.pass}, {"fail", t.fail}, {"unknown", t.unknown}}}};
    return j.dump();
}

std::vector<VerificationReport> report_from_json(const std::string& text) {
    ojson j = ojson::parse(text, nullptr, false);
    if (j.is_discarded() || !j.contains("claims"))
        throw std::domain_error("report JSON needs a \"claims\" array");
    std::vector<VerificationReport> reports;
    for (const auto& c : j["claims"]) {
        VerificationReport r;
        r.id = c.at("id").get<std::string>();
        r.paper_ref = c.at("paper_ref").get<std::string>();
        r.status = c.at("status").get<std::string>();
        r.evidence = c.at("evidence").dump();
        r.ms = c.at("ms").get<long long>();
        reports.push_back(std::move(r));
    }
    return reports;
}

}  // namespace k3m
