// Command line front end: lattice construction, discriminant forms,
// embeddings, the mirror construction, modular-curve counts, weight-system
// polytopes, and the claim catalog. Machine output with --json, persisted
// with --out. Exit status: 0 all checks pass, 1 a check fails, 2 usage or
// domain error.

#include "k3m/catalog.hpp"
#include "k3m/discform.hpp"
#include "k3m/embed.hpp"
#include "k3m/fricke.hpp"
#include "k3m/json_io.hpp"
#include "k3m/mirror.hpp"
#include "k3m/parse.hpp"
#include "k3m/toric.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace k3m;
using ojson = nlohmann::ordered_json;

struct Output {
    bool as_json = false;
    std::string out_path;

    // Prints machine or human form, persists the machine form when asked.
    void emit(const ojson& j, const std::string& human) const {
        if (as_json)
            std::cout << j.dump() << "\n";
        else
            std::cout << human;
        if (!out_path.empty()) {
            std::ofstream f(out_path);
            if (!f) throw std::domain_error("cannot write " + out_path);
            f << j.dump() << "\n";
        }
    }
};

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

ojson jmatq(const MatQ& m) {
    ojson rows = ojson::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ojson row = ojson::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat_str(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

VecZ parse_vec(const std::string& s) {
    VecZ v;
    for (const std::string& p : split(s, ',')) {
        Rat r = parse_rat(p);
        if (!is_integral(r)) throw std::domain_error("expected an integer entry: " + p);
        v.push_back(r.get_num());
    }
    return v;
}

std::vector<Rat> parse_rat_list(const std::string& s) {
    std::vector<Rat> v;
    for (const std::string& p : split(s, ',')) v.push_back(parse_rat(p));
    return v;
}

// "a,b;c,d" with rational entries.
MatQ parse_matq(const std::string& s) {
    std::vector<std::vector<Rat>> rows;
    for (const std::string& line : split(s, ';')) rows.push_back(parse_rat_list(line));
    if (rows.empty()) throw std::domain_error("empty matrix");
    MatQ m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size()) throw std::domain_error("ragged matrix rows");
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

// Inline JSON array of rows, or @path to a file holding one.
MatZ parse_matrix_spec(const std::string& spec) {
    std::string text = spec;
    if (!spec.empty() && spec[0] == '@') {
        std::ifstream f(spec.substr(1));
        if (!f) throw std::domain_error("cannot read " + spec.substr(1));
        std::ostringstream buf;
        buf << f.rdbuf();
        text = buf.str();
    }
    ojson j = ojson::parse(text, nullptr, false);
    if (j.is_discarded()) throw std::domain_error("malformed matrix JSON: " + spec);
    if (j.is_object() && j.contains("matrix")) j = j["matrix"];
    if (!j.is_array()) throw std::domain_error("matrix spec must be an array of rows");
    MatZ m(j.size(), j.empty() ? 0 : j[0].size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_array() || j[i].size() != m.cols())
            throw std::domain_error("ragged matrix rows");
        for (std::size_t k = 0; k < m.cols(); ++k) {
            const auto& e = j[i][k];
            m.at(i, k) = e.is_string() ? Int(e.get<std::string>())
                                       : Int(static_cast<long>(e.get<long long>()));
        }
    }
    return m;
}

std::string gram_human(const Lattice& l) {
    std::ostringstream os;
    if (!l.label().empty()) os << l.label() << "\n";
    for (std::size_t i = 0; i < l.rank(); ++i) {
        os << " [";
        for (std::size_t j = 0; j < l.rank(); ++j) os << " " << l.gram().at(i, j).get_str();
        os << " ]\n";
    }
    return os.str();
}

void emit_lattice(const Output& out, const Lattice& l) {
    out.emit(ojson::parse(to_json(l)), gram_human(l));
}

std::string signature_str(const Signature& s) {
    return "(" + std::to_string(s.pos) + "," + std::to_string(s.neg) + ")";
}

int cmd_lattice_show(const Output& out, const std::string& expr) {
    Lattice l = parse_lattice(expr);
    Signature sig = l.signature();
    ojson j{{"label", l.label()},
            {"rank", static_cast<long long>(l.rank())},
            {"even", l.is_even()},
            {"det", jint(l.determinant())},
            {"signature", ojson::array({static_cast<long long>(sig.pos),
                                        static_cast<long long>(sig.neg)})}};
    std::ostringstream os;
    os << l.label() << ": rank " << l.rank() << ", det " << l.determinant().get_str()
       << ", signature " << signature_str(sig) << ", " << (l.is_even() ? "even" : "odd") << "\n";
    out.emit(j, os.str());
    return 0;
}

int cmd_disc_form(const Output& out, const std::string& expr) {
    FiniteQuadraticForm a = discriminant_form(parse_lattice(expr));
    std::ostringstream os;
    os << "orders:";
    for (const Int& n : a.orders()) os << " " << n.get_str();
    os << "\nq:";
    for (std::size_t i = 0; i < a.length(); ++i) os << " " << rat_str(a.q_gen(i));
    os << "\nb:\n";
    for (std::size_t i = 0; i < a.length(); ++i) {
        os << " [";
        for (std::size_t j = 0; j < a.length(); ++j) os << " " << rat_str(a.b_gen(i, j));
        os << " ]\n";
    }
    out.emit(ojson::parse(to_json(a)), os.str());
    return 0;
}

int cmd_catalog_verify(const Output& out, const std::string& only, int jobs) {
    std::vector<VerificationReport> reports = verify_catalog(only, jobs);
    ReportTotals t = report_totals(reports);
    std::ostringstream os;
    for (const VerificationReport& r : reports)
        os << r.status << "  " << r.id << "  (" << r.ms << " ms)\n";
    os << "pass " << t.pass << ", fail " << t.fail << ", unknown " << t.unknown << "\n";
    out.emit(ojson::parse(report_to_json(reports)), os.str());
    return (t.fail == 0 && t.unknown == 0 && t.pass == static_cast<int>(reports.size())) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact lattice arithmetic for the mirror construction on K3 surfaces"};
    app.require_subcommand(1);

    Output out;
    app.add_flag("--json", out.as_json, "machine-readable output");
    app.add_option("--out", out.out_path, "write the machine-readable output to a file");

    int rc = 0;
    auto sub = [&](CLI::App* parent, const std::string& name, const std::string& desc) {
        CLI::App* s = parent->add_subcommand(name, desc);
        s->fallthrough();
        return s;
    };

    // lattice ---------------------------------------------------------------
    CLI::App* lattice = sub(&app, "lattice", "construct and inspect lattices");
    lattice->require_subcommand(1);
    {
        static std::string expr;
        CLI::App* c = sub(lattice, "make", "build a lattice from an expression");
        c->add_option("expr", expr, "lattice expression, e.g. \"U+E8(2)+<-4>\"")->required();
        c->callback([&]() { emit_lattice(out, parse_lattice(expr)); });

        static std::vector<std::string> terms;
        CLI::App* s = sub(lattice, "sum", "orthogonal direct sum of expressions");
        s->add_option("terms", terms, "two or more lattice expressions")->expected(-2);
        s->callback([&]() {
            Lattice acc = parse_lattice(terms[0]);
            std::string label = acc.label();
            for (std::size_t i = 1; i < terms.size(); ++i) {
                Lattice next = parse_lattice(terms[i]);
                acc = direct_sum(acc, next);
                label += "+" + next.label();
            }
            emit_lattice(out, acc.with_label(label));
        });

        static std::string rexpr;
        static long long factor = 1;
        CLI::App* r = sub(lattice, "rescale", "multiply the pairing by an integer");
        r->add_option("expr", rexpr, "lattice expression")->required();
        r->add_option("m", factor, "scale factor")->required();
        r->callback([&]() {
            Lattice l = parse_lattice(rexpr);
            emit_lattice(out, rescale(l, Int(static_cast<long>(factor)))
                                  .with_label(l.label() + "(" + std::to_string(factor) + ")"));
        });

        static std::string sexpr;
        CLI::App* v = sub(lattice, "show", "rank, determinant, signature, parity");
        v->add_option("expr", sexpr, "lattice expression")->required();
        v->callback([&]() { rc = cmd_lattice_show(out, sexpr); });
    }

    // disc ------------------------------------------------------------------
    CLI::App* disc = sub(&app, "disc", "discriminant quadratic forms");
    disc->require_subcommand(1);
    {
        static std::string expr;
        CLI::App* f = sub(disc, "form", "discriminant form of an even lattice");
        f->add_option("expr", expr, "lattice expression")->required();
        f->callback([&]() { rc = cmd_disc_form(out, expr); });

        static std::string ea, eb;
        static long long node_bound = 1000000;
        CLI::App* i = sub(disc, "iso", "decide isomorphism of two discriminant forms");
        i->add_option("a", ea, "first lattice expression")->required();
        i->add_option("b", eb, "second lattice expression")->required();
        i->add_option("--node-bound", node_bound, "search node budget");
        i->callback([&]() {
            bool iso = are_isomorphic(discriminant_form(parse_lattice(ea)),
                                      discriminant_form(parse_lattice(eb)),
                                      Int(static_cast<long>(node_bound)));
            out.emit(ojson{{"isomorphic", iso}},
                     std::string(iso ? "isomorphic\n" : "not isomorphic\n"));
            rc = iso ? 0 : 1;
        });
    }

    // embed -----------------------------------------------------------------
    CLI::App* embed = sub(&app, "embed", "primitive embeddings and complements");
    embed->require_subcommand(1);
    {
        static std::string ambient, matrix;
        CLI::App* c = sub(embed, "complement", "orthogonal complement of a sublattice");
        c->add_option("--ambient", ambient, "ambient lattice expression")->required();
        c->add_option("--matrix", matrix, "columns = sublattice basis (JSON rows or @file)")
            ->required();
        c->callback([&]() {
            ComplementResult res =
                orthogonal_complement(Embedding{parse_lattice(ambient), parse_matrix_spec(matrix)});
            ojson j{{"complement", ojson::parse(to_json(res.lattice))},
                    {"embedding", jmat(res.embedding)},
                    {"input_was_primitive", res.input_was_primitive}};
            std::ostringstream os;
            os << "complement rank " << res.lattice.rank()
               << (res.input_was_primitive ? "" : " (input saturated first)") << "\n"
               << gram_human(res.lattice);
            out.emit(j, os.str());
        });

        static std::string nexpr;
        CLI::App* n = sub(embed, "nikulin", "existence and uniqueness criteria in the K3 lattice");
        n->add_option("expr", nexpr, "even hyperbolic lattice expression")->required();
        n->callback([&]() {
            Lattice l = parse_lattice(nexpr);
            auto word = [](Criterion c) {
                return c == Criterion::guaranteed ? "guaranteed" : "not-implied";
            };
            Criterion e = nikulin_exists(l);
            Criterion u = nikulin_unique(l);
            out.emit(ojson{{"exists", word(e)}, {"unique", word(u)}},
                     std::string("exists: ") + word(e) + "\nunique: " + word(u) + "\n");
        });

        static std::string aexpr, fcsv;
        static long long m_opt = 0, bound = 8;
        CLI::App* a = sub(embed, "admissible", "hyperbolic-pair search for an isotropic vector");
        a->add_option("--lattice", aexpr, "lattice expression")->required();
        a->add_option("--f", fcsv, "isotropic vector, comma-separated")->required();
        a->add_option("--m", m_opt, "required divisor (defaults to div f)");
        a->add_option("--bound", bound, "coefficient bound for the partner search");
        a->callback([&]() {
            Lattice l = parse_lattice(aexpr);
            VecZ f = parse_vec(fcsv);
            Int m = m_opt > 0 ? Int(static_cast<long>(m_opt)) : l.div(f);
            AdmissibilityResult res = is_m_admissible(l, f, m, Int(static_cast<long>(bound)));
            const char* verdict = res.verdict == Admissibility::yes       ? "yes"
                                  : res.verdict == Admissibility::no      ? "no"
                                                                          : "unknown";
            ojson j{{"verdict", verdict}, {"m", jint(m)}};
            if (res.g) j["g"] = jvec(*res.g);
            if (res.splitting_basis) j["witness"] = jmat(*res.splitting_basis);
            if (res.complement) j["complement"] = ojson::parse(to_json(*res.complement));
            out.emit(j, std::string("admissible: ") + verdict + "\n");
            rc = res.verdict == Admissibility::yes ? 0 : 1;
        });
    }

    // mirror ----------------------------------------------------------------
    CLI::App* mirror = sub(&app, "mirror", "the mirror-lattice construction");
    mirror->require_subcommand(1);
    {
        static std::string ambient = "L_K3", subexpr, matrix, fcsv;
        CLI::App* c = sub(mirror, "compute", "mirror of a primitively embedded lattice");
        c->add_option("--ambient", ambient, "ambient lattice expression (default L_K3)");
        c->add_option("--sub", subexpr, "polarizing sublattice expression")->required();
        c->add_option("--matrix", matrix, "columns = sublattice basis in ambient coordinates");
        c->add_option("--f", fcsv, "isotropic vector in ambient coordinates");
        c->callback([&]() {
            Lattice amb = parse_lattice(ambient);
            Lattice m = parse_lattice(subexpr);
            MatZ cols;
            if (!matrix.empty()) {
                cols = parse_matrix_spec(matrix);
            } else {
                // Canonical placement for the rank-1 degree-2n case: the
                // vector f3 + n g3 in the third hyperbolic plane.
                if (m.rank() != 1 || !(amb.gram() == lat::k3().gram()))
                    throw std::domain_error(
                        "--matrix is required unless the sublattice is rank 1 inside L_K3");
                Int norm = m.gram().at(0, 0);
                if (norm <= 0 || !divides(2, norm))
                    throw std::domain_error("rank-1 polarization must have positive even norm");
                cols = MatZ(22, 1);
                cols.at(4, 0) = 1;
                cols.at(5, 0) = divexact(norm, 2);
            }
            VecZ f;
            if (!fcsv.empty()) {
                f = parse_vec(fcsv);
            } else {
                f = VecZ(amb.rank(), Int(0));
                f[0] = 1;  // first hyperbolic generator, valid for the default placement
            }
            MirrorResult res = mirror_of_polarization(m, Embedding{amb, cols}, f);
            std::ostringstream os;
            os << "m = " << res.m.get_str() << ", mirror rank " << res.check_lattice.rank()
               << "\n"
               << gram_human(res.check_lattice);
            out.emit(ojson::parse(to_json(res)), os.str());
        });

        static std::string da, db;
        CLI::App* d = sub(mirror, "dual", "rank sum 20 and opposite discriminant forms");
        d->add_option("a", da, "first lattice expression")->required();
        d->add_option("b", db, "second lattice expression")->required();
        d->callback([&]() {
            Lattice a = parse_lattice(da);
            Lattice b = parse_lattice(db);
            bool dual = k3_dual(a, b);
            ojson j{{"k3_dual", dual},
                    {"rank_sum", static_cast<long long>(a.rank() + b.rank())}};
            out.emit(j, std::string(dual ? "dual partners\n" : "not dual partners\n"));
            rc = dual ? 0 : 1;
        });

        static std::string texpr, tf, tg, zre, zim;
        CLI::App* t = sub(mirror, "tube", "tube-domain point on the period quadric");
        t->add_option("--lattice", texpr, "lattice expression")->required();
        t->add_option("--f", tf, "isotropic vector, comma-separated")->required();
        t->add_option("--g", tg, "partner with (f,g)=1, comma-separated")->required();
        t->add_option("--z-re", zre, "real parts over the complement basis")->required();
        t->add_option("--z-im", zim, "imaginary parts over the complement basis")->required();
        t->callback([&]() {
            std::vector<Rat> re = parse_rat_list(zre);
            std::vector<Rat> im = parse_rat_list(zim);
            if (re.size() != im.size())
                throw std::domain_error("--z-re and --z-im must have equal length");
            std::vector<CRat> z;
            for (std::size_t i = 0; i < re.size(); ++i) z.emplace_back(re[i], im[i]);
            TubeResult res =
                tube_alpha(parse_lattice(texpr), parse_vec(tf), parse_vec(tg), z);
            ojson mu = ojson::array();
            for (const CRat& c : res.mu)
                mu.push_back(ojson::array({rat_str(c.re), rat_str(c.im)}));
            ojson j{{"mu", std::move(mu)},
                    {"mu_pair_conj", rat_str(res.mu_pair_conj)},
                    {"in_domain", res.in_domain}};
            std::ostringstream os;
            os << "(mu, conj mu) = " << rat_str(res.mu_pair_conj) << ", "
               << (res.in_domain ? "inside" : "outside") << " the domain\n";
            out.emit(j, os.str());
        });

        static long long wn = 0;
        static bool symbolic = false;
        CLI::App* w = sub(mirror, "wedge", "wedge-square identity behind the base change");
        w->add_option("--n", wn, "fixed multiplier");
        w->add_flag("--symbolic", symbolic, "treat the multiplier as an indeterminate");
        w->callback([&]() {
            bool holds;
            ojson j;
            if (symbolic) {
                holds = kummer_wedge_identity_symbolic();
                j = ojson{{"symbolic", true}, {"holds", holds}};
            } else {
                if (wn < 1) throw std::domain_error("--n must be a positive integer");
                holds = kummer_wedge_identity(Int(static_cast<long>(wn)));
                j = ojson{{"n", wn}, {"holds", holds}};
            }
            out.emit(j, std::string(holds ? "holds\n" : "fails\n"));
            rc = holds ? 0 : 1;
        });
    }

    // fricke ----------------------------------------------------------------
    CLI::App* fricke = sub(&app, "fricke", "level-n modular arithmetic");
    fricke->require_subcommand(1);
    {
        static long long cn = 1;
        CLI::App* c = sub(fricke, "counts", "orbit, cusp, excluded-wall and class numbers");
        c->add_option("--n", cn, "level")->required();
        c->callback([&]() {
            Int n(static_cast<long>(cn));
            ojson j{{"orbit_count", jint(isotropic_orbit_count(n))},
                    {"cusp_count", jint(cusp_count(n))},
                    {"excluded_count", jint(excluded_count(n))},
                    {"class_number", jint(class_number(-4 * n))}};
            std::ostringstream os;
            os << "orbit_count " << j["orbit_count"].dump() << "\ncusp_count "
               << j["cusp_count"].dump() << "\nexcluded_count " << j["excluded_count"].dump()
               << "\nclass_number " << j["class_number"].dump() << "\n";
            out.emit(j, os.str());
        });

        static long long mn = 1;
        static std::string ra, rb;
        static bool use_fricke = false, prime = false;
        CLI::App* m = sub(fricke, "matrix", "rank-3 action of a half-plane element");
        m->add_option("--n", mn, "level")->required();
        m->add_option("--ra", ra, "rational part, \"a,b;c,d\"");
        m->add_option("--rb", rb, "surd part coefficients, \"a,b;c,d\"");
        m->add_flag("--fricke", use_fricke, "use the Fricke element as input");
        m->add_flag("--prime", prime, "conjugated tube-domain action");
        m->callback([&]() {
            Int n(static_cast<long>(mn));
            SqrtMat g = use_fricke
                            ? fricke_element(n)
                            : SqrtMat(ra.empty() ? MatQ::identity(2) : parse_matq(ra),
                                      rb.empty() ? MatQ(2, 2) : parse_matq(rb), n);
            SqrtMat a = prime ? embed_Aprime(g) : embed_A(g);
            ojson j{{"ra", jmatq(a.ra)}, {"rb", jmatq(a.rb)}, {"integral", is_integral(a)}};
            std::ostringstream os;
            os << (prime ? "A'(g)" : "A(g)") << (is_integral(a) ? " (integral)" : "") << "\n";
            for (std::size_t i = 0; i < a.rows(); ++i) {
                os << " [";
                for (std::size_t k = 0; k < a.cols(); ++k) {
                    SqrtInt e = a.at(i, k);
                    os << " " << rat_str(e.a);
                    if (e.b != 0) os << "+" << rat_str(e.b) << "*sqrt(" << n.get_str() << ")";
                }
                os << " ]\n";
            }
            out.emit(j, os.str());
        });
    }

    // toric -----------------------------------------------------------------
    CLI::App* toric = sub(&app, "toric", "weight-system simplices");
    {
        static std::string weights;
        CLI::App* a = sub(toric, "analyze", "simplex, polar dual, group order, edge counts");
        toric->require_subcommand(1);
        a->add_option("--weights", weights, "four positive integers, comma-separated")
            ->required();
        a->callback([&]() {
            VecZ w = parse_vec(weights);
            if (w.size() != 4) throw std::domain_error("--weights needs four entries");
            WeightSystem ws({w[0], w[1], w[2], w[3]});
            Simplex3 delta = delta_of_weights(ws);
            PolarDualResult dual = polar_dual(delta);
            PiGroup pg = pi_group_structure(ws);

            ojson dv = ojson::array();
            for (const VecZ& v : delta.vertices) dv.push_back(jvec(v));
            ojson j{{"weights", jvec(w)}, {"delta_vertices", std::move(dv)}};
            if (dual.dual) {
                ojson uv = ojson::array();
                for (const VecZ& v : dual.dual->vertices) uv.push_back(jvec(v));
                j["dual_vertices"] = std::move(uv);
            } else {
                j["dual_vertices"] = nullptr;
            }
            j["reflexive"] = dual.reflexive;
            j["pi_order"] = jint(pi_group_order(ws));
            j["pi_invariant_factors"] = jvec(pg.invariant_factors);

            ojson edges = ojson::array();
            bool star_holds = false;
            if (dual.reflexive) {
                StarReport star = condition_star(ws);
                star_holds = star.holds;
                for (const StarRow& r : star.rows)
                    edges.push_back(ojson{{"i", r.i},
                                          {"j", r.j},
                                          {"interior", jint(r.edge_count)},
                                          {"dual_interior", jint(r.dual_count)}});
                j["edge_table"] = std::move(edges);
                j["condition_star"] = star_holds;
            } else {
                for (const EdgeCount& e : edge_interior_counts(delta))
                    edges.push_back(ojson{{"i", e.i}, {"j", e.j}, {"interior", jint(e.count)}});
                j["edge_table"] = std::move(edges);
                j["condition_star"] = nullptr;
            }

            std::ostringstream os;
            os << "reflexive: " << (dual.reflexive ? "yes" : "no") << "\npi order: "
               << pi_group_order(ws).get_str() << "\ncondition (*): "
               << (dual.reflexive ? (star_holds ? "holds" : "fails") : "n/a") << "\n";
            out.emit(j, os.str());
        });
    }

    // catalog ---------------------------------------------------------------
    CLI::App* catalog = sub(&app, "catalog", "embedded tables and the claim verifier");
    catalog->require_subcommand(1);
    {
        CLI::App* t = sub(catalog, "table", "the fourteen exceptional triples");
        t->callback([&]() {
            ojson j = ojson::parse(arnold_table_json());
            std::ostringstream os;
            os << "name  triple   weights    N   dual     d0\n";
            for (const ArnoldRow& r : arnold_table()) {
                char line[96];
                std::snprintf(line, sizeof line, "%-4s  (%d,%d,%d)  (%d,%d,%d)  %3d  (%d,%d,%d)  %s\n",
                              r.name.c_str(), r.triple[0], r.triple[1], r.triple[2], r.weights[0],
                              r.weights[1], r.weights[2], r.degree, r.dual_triple[0],
                              r.dual_triple[1], r.dual_triple[2],
                              r.d0 ? std::to_string(*r.d0).c_str() : "-");
                os << line;
            }
            out.emit(j, os.str());
        });

        static std::string only;
        static int jobs = 1;
        CLI::App* v = sub(catalog, "verify", "run every checkable claim");
        v->add_option("--only", only, "keep claims whose id starts with this prefix");
        v->add_option("--jobs", jobs, "parallel workers")->check(CLI::PositiveNumber);
        v->callback([&]() { rc = cmd_catalog_verify(out, only, jobs); });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
