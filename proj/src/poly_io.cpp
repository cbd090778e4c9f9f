#include "ivp/poly_io.hpp"

#include <cctype>
#include <map>

namespace ivp {

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
};

std::string read_number(Cursor& c) {
    c.skip_ws();
    std::string out;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i])))
        out += c.s[c.i++];
    if (out.empty()) throw std::invalid_argument("parse_poly: expected a number at '" +
                                                 c.s.substr(c.i) + "'");
    return out;
}

}  // namespace

RatPoly parse_poly(const std::string& text) {
    Cursor c{text};
    std::map<size_t, Rat> terms;
    bool first = true;
    while (!c.done()) {
        int sign = 1;
        char ch = c.peek();
        if (ch == '+' || ch == '-') {
            sign = ch == '-' ? -1 : 1;
            ++c.i;
        } else if (!first) {
            throw std::invalid_argument("parse_poly: expected + or - between terms");
        }
        first = false;

        Rat coeff = 1;
        bool saw_coeff = false;
        c.skip_ws();
        if (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) {
            std::string num = read_number(c);
            c.skip_ws();
            if (c.i < c.s.size() && c.s[c.i] == '/') {
                ++c.i;
                std::string den = read_number(c);
                coeff = parse_rat(num + "/" + den);
            } else {
                coeff = parse_rat(num);
            }
            saw_coeff = true;
            c.skip_ws();
            if (c.i < c.s.size() && c.s[c.i] == '*') ++c.i;
        }

        size_t exp = 0;
        c.skip_ws();
        if (c.i < c.s.size() && (c.s[c.i] == 'x' || c.s[c.i] == 'X')) {
            ++c.i;
            exp = 1;
            c.skip_ws();
            if (c.i < c.s.size() && c.s[c.i] == '^') {
                ++c.i;
                exp = std::stoul(read_number(c));
            }
        } else if (!saw_coeff) {
            throw std::invalid_argument("parse_poly: empty term");
        }
        terms[exp] += sign > 0 ? coeff : Rat(-coeff);
    }
    if (terms.empty()) return {};
    std::vector<Rat> coeffs(terms.rbegin()->first + 1, Rat(0));
    for (const auto& [e, q] : terms) coeffs[e] = q;
    return RatPoly(std::move(coeffs));
}

std::string poly_text(const RatPoly& f) { return f.str(); }

json poly_json(const RatPoly& f) {
    json coeffs = json::array();
    for (int i = 0; i <= f.degree(); ++i) coeffs.push_back(to_string(f.coeff(static_cast<size_t>(i))));
    return json{{"coeffs", coeffs}};
}

RatPoly poly_from_json(const json& j) {
    std::vector<Rat> c;
    for (const auto& s : j.at("coeffs")) c.push_back(parse_rat(s.get<std::string>()));
    return RatPoly(std::move(c));
}

namespace {

// integers land as JSON numbers when they fit, decimal strings otherwise
json int_json(const Int& n) {
    if (n.fits_slong_p()) return json(n.get_si());
    return json(to_string(n));
}

}  // namespace

json polygon_json(const NewtonPolygon& np) {
    json segs = json::array();
    for (const auto& s : np.segments)
        segs.push_back(json{{"slope", to_string(s.slope)}, {"length", s.length}});
    return json{{"prime", int_json(np.prime)}, {"zero_roots", np.zero_roots}, {"segments", segs}};
}

json multiset_json(const ValMultiset& m) {
    json a = json::array();
    for (const auto& [v, k] : m) a.push_back(json{{"value", v.str()}, {"multiplicity", k}});
    return a;
}

json matrix_json(const ValuationMatrix& m) {
    json rows = json::array();
    for (size_t i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < m.size(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(row);
    }
    json out{{"n", m.size()}, {"entries", rows}};
    if (!m.labels().empty()) out["labels"] = m.labels();
    return out;
}

ValuationMatrix matrix_from_json(const json& j) {
    size_t n = j.at("n").get<size_t>();
    std::vector<Val> e;
    e.reserve(n * n);
    for (const auto& row : j.at("entries"))
        for (const auto& cell : row) e.push_back(Val::parse(cell.get<std::string>()));
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
    return ValuationMatrix(n, std::move(e), std::move(labels));
}

json index_report_json(const IndexReport& rep) {
    json tested = json::array();
    for (const auto& t : rep.tested) {
        json item{{"p", to_string(t.p)}, {"divides", t.divides}};
        if (t.witness) item["witness_factor"] = poly_text(t.witness->lift());
        tested.push_back(item);
    }
    return json{{"min_poly", poly_text(rep.min_poly)},
                {"disc", to_string(rep.disc)},
                {"unfactored_part", to_string(rep.unfactored_part)},
                {"index_is_one", tri_state_name(rep.index_is_one)},
                {"tested_primes", tested},
                {"note", rep.note}};
}

json splitting_json(const SplittingReport& rep) {
    json pairs = json::array();
    for (const auto& [e, f] : rep.pairs) pairs.push_back(json{{"e", e}, {"f", f}});
    return json{{"min_poly", poly_text(rep.min_poly)},
                {"prime", rep.prime},
                {"index_ok", rep.index_ok},
                {"pairs", pairs},
                {"reason", rep.reason}};
}

json classification_json(const ClassificationReport& rep) {
    json gauge = json::array();
    for (const auto& g : rep.gauge) gauge.push_back(g.str());
    json out{{"kind", seq_kind_name(rep.kind)},
             {"gauge", gauge},
             {"prefix_certified", rep.prefix_certified},
             {"prefix_len", rep.prefix_len}};
    if (rep.kind != SeqKind::None) {
        out["breadth"] = rep.breadth.str();
        out["breadth_ideal_hint"] = breadth_hint_name(rep.hint);
        if (rep.hint_radius) out["hint_radius"] = rep.hint_radius->str();
    }
    if (!rep.reason.empty()) out["reason"] = rep.reason;
    return out;
}

json crosscheck_json(const CrosscheckReport& rep) {
    json items = json::array();
    for (const auto& it : rep.items)
        items.push_back(json{{"gamma", it.gamma.str()},
                             {"cover_size", it.cover_size},
                             {"class_count", it.class_count},
                             {"ok", it.ok}});
    return json{{"items", items}, {"breadth_notes", rep.breadth_notes}, {"all_ok", rep.all_ok}};
}

json family_crosscheck_json(const FamilyCrosscheck& rep) {
    json entries = json::array();
    for (const auto& e : rep.entries) {
        if (!e.checked) continue;
        entries.push_back(
            json{{"what", e.what}, {"ok", e.ok}, {"expected", e.expected}, {"got", e.got}});
    }
    return json{{"checked", rep.checked}, {"all_ok", rep.all_ok}, {"entries", entries}};
}

json family_verdict_json(const FamilyVerdict& v) {
    json out{{"classification", classification_json(v.classification)},
             {"suffix_start", v.suffix_start},
             {"nontrivial", v.nontrivial},
             {"mechanism", v.mechanism},
             {"note", v.note}};
    if (v.generator)
        out["generator"] = json{{"f", poly_text(v.generator->f)}, {"d", to_string(v.generator->d)}};
    return out;
}

std::vector<IvpGenerator> gens_from_json(const json& j) {
    std::vector<IvpGenerator> out;
    for (const auto& item : j) {
        IvpGenerator g;
        g.f = parse_poly(item.at("f").get<std::string>());
        if (item.at("d").is_string())
            g.d = Int(item.at("d").get<std::string>());
        else
            g.d = Int(item.at("d").get<long>());
        out.push_back(std::move(g));
    }
    return out;
}

json gens_json(const std::vector<IvpGenerator>& gens) {
    json out = json::array();
    for (const auto& g : gens) out.push_back(json{{"f", poly_text(g.f)}, {"d", int_json(g.d)}});
    return out;
}

}  // namespace ivp
