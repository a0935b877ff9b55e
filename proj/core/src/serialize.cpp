/*
   Copyright 2026 modind contributors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "modind/serialize.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace modind::serialize {

using gf::Field;
using gf::FieldElem;
using linalg::Matrix;
using json = nlohmann::ordered_json;

namespace {

FieldElem parse_entry(const Field& f, const json& j, const std::string& where) {
    if (j.is_number_integer()) return FieldElem::from_int(f, j.get<std::int64_t>());
    if (j.is_array()) {
        std::vector<gf::coeff_t> cs;
        for (const auto& c : j) {
            if (!c.is_number_integer())
                throw input_error(where + ": entry coefficients must be integers");
            std::int64_t v = c.get<std::int64_t>();
            std::int64_t p = static_cast<std::int64_t>(f->characteristic);
            cs.push_back(static_cast<gf::coeff_t>(((v % p) + p) % p));
        }
        if (cs.size() > f->degree)
            throw input_error(where + ": entry has more coefficients than the field degree");
        cs.resize(f->degree, 0);
        return FieldElem(f, std::move(cs));
    }
    throw input_error(where + ": entry must be an integer or a coefficient list");
}

Matrix parse_matrix(const Field& f, const json& j, std::size_t dim, const std::string& where) {
    if (!j.is_array() || j.size() != dim)
        throw input_error(where + ": expected a " + std::to_string(dim) + "-row matrix");
    Matrix m(f, dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        const auto& row = j[i];
        if (!row.is_array() || row.size() != dim)
            throw input_error(where + ": row " + std::to_string(i) + " must have " +
                              std::to_string(dim) + " entries");
        for (std::size_t k = 0; k < dim; ++k)
            m.at(i, k) = parse_entry(f, row[k],
                                     where + "[" + std::to_string(i) + "][" + std::to_string(k) + "]");
    }
    return m;
}

const json& require_key(const json& j, const std::string& key) {
    auto it = j.find(key);
    if (it == j.end()) throw input_error("missing key \"" + key + "\"");
    return *it;
}

std::uint64_t require_uint(const json& j, const std::string& key) {
    const auto& v = require_key(j, key);
    if (!v.is_number_integer() || v.get<std::int64_t>() <= 0)
        throw input_error("\"" + key + "\" must be a positive integer");
    return v.get<std::uint64_t>();
}

json elem_to_json(const FieldElem& x) {
    json cs = json::array();
    std::vector<gf::coeff_t> padded = x.coeffs();
    padded.resize(x.field()->degree, 0);
    for (auto c : padded) cs.push_back(c);
    return cs;
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(elem_to_json(m.at(i, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json poly_to_json(const gf::Poly& f) {
    json j;
    j["text"] = f.to_string();
    json cs = json::array();
    for (const auto& c : f.coeffs()) cs.push_back(elem_to_json(c));
    j["coeffs"] = std::move(cs);
    return j;
}

json field_to_json(const Field& f) {
    json j;
    j["characteristic"] = f->characteristic;
    j["degree"] = f->degree;
    json mod = json::array();
    for (auto c : f->modulus) mod.push_back(c);
    j["modulus"] = std::move(mod);
    return j;
}

json submodule_to_json(const decomp::Submodule& s) {
    json j;
    j["dim"] = s.basis.dim();
    j["rows"] = matrix_to_json(s.rows);
    j["basis"] = matrix_to_json(s.basis.basis());
    json gens = json::array();
    for (const auto& g : s.rep_on.gens) gens.push_back(matrix_to_json(g));
    j["action"] = std::move(gens);
    json endo;
    endo["field_size"] = s.endo.field_size;
    json eb = json::array();
    for (const auto& b : s.endo.basis) eb.push_back(matrix_to_json(b));
    endo["basis"] = std::move(eb);
    j["endo"] = std::move(endo);
    return j;
}

}  // namespace

induct::InductionInput parse_input(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw input_error("top level must be a JSON object");

    const auto& jf = require_key(j, "field");
    std::uint64_t ch = require_uint(jf, "characteristic");
    std::uint64_t deg = require_uint(jf, "degree");
    Field f;
    if (jf.contains("modulus")) {
        std::vector<gf::coeff_t> mod;
        for (const auto& c : jf["modulus"]) {
            if (!c.is_number_unsigned() && !c.is_number_integer())
                throw input_error("\"modulus\" coefficients must be integers");
            mod.push_back(c.get<gf::coeff_t>());
        }
        f = gf::mk_field_with_modulus(ch, std::move(mod));
        if (f->degree != deg) throw input_error("\"modulus\" degree disagrees with \"degree\"");
    } else {
        f = gf::mk_field(ch, deg);
    }

    induct::InductionInput in;
    in.p = require_uint(j, "p");
    in.rep.field = f;
    in.rep.dim = require_uint(j, "dim");

    const auto& hg = require_key(j, "h_gens");
    if (!hg.is_array() || hg.empty()) throw input_error("\"h_gens\" must be a nonempty array");
    for (std::size_t i = 0; i < hg.size(); ++i)
        in.rep.gens.push_back(parse_matrix(f, hg[i], in.rep.dim, "h_gens[" + std::to_string(i) + "]"));

    const auto& cg = require_key(j, "conj_gens");
    if (!cg.is_array() || cg.size() != hg.size())
        throw input_error("\"conj_gens\" must match \"h_gens\" in length");
    for (std::size_t i = 0; i < cg.size(); ++i)
        in.conj.push_back(parse_matrix(f, cg[i], in.rep.dim, "conj_gens[" + std::to_string(i) + "]"));

    in.a_p = parse_matrix(f, require_key(j, "a_p"), in.rep.dim, "a_p");
    in.validate();
    return in;
}

induct::InductionInput load_input(const std::string& path) {
    std::ifstream fs(path);
    if (!fs) throw input_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << fs.rdbuf();
    return parse_input(buf.str());
}

std::string input_to_json(const induct::InductionInput& in) {
    json j;
    j["p"] = in.p;
    json jf;
    jf["characteristic"] = in.rep.field->characteristic;
    jf["degree"] = in.rep.field->degree;
    json mod = json::array();
    for (auto c : in.rep.field->modulus) mod.push_back(c);
    jf["modulus"] = std::move(mod);
    j["field"] = std::move(jf);
    j["dim"] = in.rep.dim;
    json hg = json::array();
    for (const auto& g : in.rep.gens) hg.push_back(matrix_to_json(g));
    j["h_gens"] = std::move(hg);
    json cg = json::array();
    for (const auto& g : in.conj) cg.push_back(matrix_to_json(g));
    j["conj_gens"] = std::move(cg);
    j["a_p"] = matrix_to_json(in.a_p);
    return j.dump(2) + "\n";
}

std::string report_to_json(const decomp::StructureReport& r) {
    json j;
    j["case"] = decomp::to_string(r.tag);
    j["p"] = r.p;
    j["dim"] = r.d;
    j["induced_dim"] = r.p * r.d;
    j["field"] = field_to_json(r.induced.field);
    json ig = json::array();
    for (const auto& g : r.induced.gens) ig.push_back(matrix_to_json(g));
    j["induced_action"] = std::move(ig);

    if (r.stable) {
        json s;
        s["alpha"] = matrix_to_json(r.stable->alpha);
        json d;
        d["size"] = gf::field_order(r.stable->endo->ext());
        d["degree"] = r.stable->endo->e();
        s["delta"] = std::move(d);
        s["lambda"] = elem_to_json(r.stable->lambda);
        s["alpha_twist"] = r.stable->alpha_twist;
        s["order_on_delta"] = r.stable->order_on_delta;
        j["stable"] = std::move(s);
    }
    if (r.eta) j["eta"] = elem_to_json(*r.eta);
    if (r.xi) j["xi"] = elem_to_json(*r.xi);

    if (!r.factors.empty()) {
        json fs = json::array();
        for (const auto& f : r.factors) fs.push_back(poly_to_json(f));
        j["factors"] = std::move(fs);
    }
    if (!r.summands.empty()) {
        json ss = json::array();
        for (const auto& s : r.summands) ss.push_back(submodule_to_json(s));
        j["summands"] = std::move(ss);
        json ic = json::array();
        for (const auto& cls : r.iso_classes) {
            json c = json::array();
            for (auto i : cls) c.push_back(i);
            ic.push_back(std::move(c));
        }
        j["iso_classes"] = std::move(ic);
    }
    if (!r.series.empty()) {
        json ss = json::array();
        for (const auto& s : r.series) ss.push_back(submodule_to_json(s));
        j["series"] = std::move(ss);
    }

    json checks = json::array();
    for (const auto& [name, ok] : r.checks) {
        json c;
        c["name"] = name;
        c["ok"] = ok;
        checks.push_back(std::move(c));
    }
    j["checks"] = std::move(checks);
    j["oracle_ran"] = r.oracle_ran;
    j["all_ok"] = r.all_ok();
    return j.dump(2) + "\n";
}

std::string report_to_text(const decomp::StructureReport& r) {
    std::ostringstream os;
    const Field& f = r.induced.field;
    os << "case: " << decomp::to_string(r.tag) << "\n";
    os << "field: GF(" << f->characteristic;
    if (f->degree > 1) os << "^" << f->degree;
    os << ")\n";
    os << "input dim: " << r.d << ", induced dim: " << r.p * r.d << ", index p = " << r.p << "\n";
    if (r.stable) {
        os << "Delta = GF(" << gf::field_order(r.stable->endo->ext()) << "), alpha order "
           << r.stable->order_on_delta << " on Delta, lambda = "
           << r.stable->lambda.to_string() << "\n";
    }
    if (r.eta) os << "eta = " << r.eta->to_string() << "\n";
    if (r.xi) os << "xi = " << r.xi->to_string() << "\n";
    if (!r.factors.empty()) {
        os << "factors:";
        for (const auto& mu : r.factors) os << "  (" << mu.to_string() << ")";
        os << "\n";
    }
    if (!r.summands.empty()) {
        os << "summands: " << r.summands.size() << "\n";
        for (std::size_t i = 0; i < r.summands.size(); ++i) {
            const auto& s = r.summands[i];
            os << "  [" << i << "] dim " << s.basis.dim();
            if (s.endo.field_size) os << ", End = GF(" << s.endo.field_size << ")";
            os << "\n";
        }
        os << "isomorphism classes:";
        for (const auto& cls : r.iso_classes) {
            os << " {";
            for (std::size_t i = 0; i < cls.size(); ++i) os << (i ? " " : "") << cls[i];
            os << "}";
        }
        os << "\n";
    }
    if (!r.series.empty()) {
        os << "composition series (unique):";
        for (const auto& s : r.series) os << " " << s.basis.dim();
        os << "\n";
    }
    std::size_t failed = 0;
    for (const auto& [name, ok] : r.checks)
        if (!ok) ++failed;
    os << "checks: " << r.checks.size() - failed << "/" << r.checks.size() << " passed";
    if (r.oracle_ran) os << " (brute-force oracle included)";
    os << "\n";
    for (const auto& [name, ok] : r.checks)
        if (!ok) os << "  FAILED: " << name << "\n";
    os << (r.all_ok() ? "OK" : "FAILED") << "\n";
    return os.str();
}

}  // namespace modind::serialize
