#include "k3m/json_io.hpp"

#include "json.hpp"

#include <stdexcept>

namespace k3m {

namespace {

using ojson = nlohmann::ordered_json;

ojson int_out(const Int& v) {
    if (v.fits_slong_p()) return ojson(static_cast<long long>(v.get_si()));
    return ojson(v.get_str());
}

Int int_in(const ojson& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::domain_error("expected an integer, got " + j.dump());
}

ojson mat_out(const MatZ& m) {
    ojson rows = ojson::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ojson row = ojson::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_out(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

MatZ mat_in(const ojson& j) {
    if (!j.is_array() || j.empty()) throw std::domain_error("expected a nonempty matrix");
    std::size_t r = j.size();
    std::size_t c = j[0].is_array() ? j[0].size() : 0;
    if (c == 0) throw std::domain_error("expected a nonempty matrix");
    MatZ m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (!j[i].is_array() || j[i].size() != c)
            throw std::domain_error("ragged matrix rows");
        for (std::size_t k = 0; k < c; ++k) m.at(i, k) = int_in(j[i][k]);
    }
    return m;
}

ojson vec_out(const VecZ& v) {
    ojson a = ojson::array();
    for (const Int& x : v) a.push_back(int_out(x));
    return a;
}

VecZ vec_in(const ojson& j) {
    if (!j.is_array()) throw std::domain_error("expected an integer vector");
    VecZ v;
    for (const auto& x : j) v.push_back(int_in(x));
    return v;
}

ojson parse_text(const std::string& text) {
    ojson j = ojson::parse(text, nullptr, false);
    if (j.is_discarded()) throw std::domain_error("malformed JSON: " + text);
    return j;
}

ojson lattice_out(const Lattice& l) {
    ojson j;
    if (!l.label().empty()) j["label"] = l.label();
    j["gram"] = mat_out(l.gram());
    return j;
}

Lattice lattice_in(const ojson& j) {
    if (!j.is_object() || !j.contains("gram"))
        throw std::domain_error("lattice JSON needs a \"gram\" key");
    MatZ g = mat_in(j["gram"]);
    std::string label;
    if (j.contains("label")) label = j["label"].get<std::string>();
    return Lattice(std::move(g), std::move(label));
}

}  // namespace

std::string to_json(const Lattice& l) { return lattice_out(l).dump(); }

Lattice lattice_from_json(const std::string& text) { return lattice_in(parse_text(text)); }

std::string to_json(const FiniteQuadraticForm& a) {
    ojson j;
    j["orders"] = ojson::array();
    for (const Int& n : a.orders()) j["orders"].push_back(int_out(n));
    j["q"] = ojson::array();
    for (std::size_t i = 0; i < a.length(); ++i) j["q"].push_back(rat_str(a.q_gen(i)));
    j["b"] = ojson::array();
    for (std::size_t i = 0; i < a.length(); ++i) {
        ojson row = ojson::array();
        for (std::size_t k = 0; k < a.length(); ++k) row.push_back(rat_str(a.b_gen(i, k)));
        j["b"].push_back(std::move(row));
    }
    return j.dump();
}

FiniteQuadraticForm fqf_from_json(const std::string& text) {
    ojson j = parse_text(text);
    if (!j.is_object() || !j.contains("orders") || !j.contains("q") || !j.contains("b"))
        throw std::domain_error("finite form JSON needs \"orders\", \"q\", \"b\"");
    std::vector<Int> orders;
    for (const auto& x : j["orders"]) orders.push_back(int_in(x));
    std::vector<Rat> q;
    for (const auto& x : j["q"]) q.push_back(parse_rat(x.get<std::string>()));
    std::vector<std::vector<Rat>> b;
    for (const auto& row : j["b"]) {
        std::vector<Rat> r;
        for (const auto& x : row) r.push_back(parse_rat(x.get<std::string>()));
        b.push_back(std::move(r));
    }
    return FiniteQuadraticForm(std::move(orders), std::move(q), std::move(b));
}

std::string to_json(const Embedding& e) {
    ojson j;
    j["ambient"] = lattice_out(e.ambient);
    j["matrix"] = mat_out(e.matrix);
    return j.dump();
}

Embedding embedding_from_json(const std::string& text) {
    ojson j = parse_text(text);
    if (!j.is_object() || !j.contains("ambient") || !j.contains("matrix"))
        throw std::domain_error("embedding JSON needs \"ambient\" and \"matrix\"");
    return Embedding{lattice_in(j["ambient"]), mat_in(j["matrix"])};
}

std::string to_json(const MirrorResult& r) {
    ojson j;
    j["check_lattice"] = lattice_out(r.check_lattice);
    j["m"] = int_out(r.m);
    j["f"] = vec_out(r.f_used);
    if (r.splitting_witness) j["witness"] = mat_out(*r.splitting_witness);
    return j.dump();
}

MirrorResult mirror_result_from_json(const std::string& text) {
    ojson j = parse_text(text);
    if (!j.is_object() || !j.contains("check_lattice") || !j.contains("m") || !j.contains("f"))
        throw std::domain_error("mirror JSON needs \"check_lattice\", \"m\", \"f\"");
    MirrorResult r{lattice_in(j["check_lattice"]), vec_in(j["f"]), int_in(j["m"]), std::nullopt};
    if (j.contains("witness") && !j["witness"].is_null()) r.splitting_witness = mat_in(j["witness"]);
    return r;
}

}  // namespace k3m
