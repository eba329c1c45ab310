#include "tate/io.hpp"

#include <map>

namespace tate {

namespace {

Field field_of(const Json& j, Field fallback) {
    if (j.contains("field")) return Field::parse(j.at("field").get<std::string>());
    return fallback;
}

int degree_of(const Json& j) {
    if (!j.contains("degree") || !j.at("degree").is_number_integer()) throw FormatError("element needs an integer \"degree\"");
    return j.at("degree").get<int>();
}

const Json& terms_of(const Json& j) {
    if (!j.contains("terms") || !j.at("terms").is_array()) throw FormatError("element needs a \"terms\" array");
    return j.at("terms");
}

Elt element_at(const FiniteGroup& G, const Json& v) {
    if (!v.is_number_integer()) throw FormatError("group elements are integers");
    int g = v.get<int>();
    if (g < 0 || g >= G.order()) throw FormatError("element " + std::to_string(g) + " outside 0.." + std::to_string(G.order() - 1));
    return static_cast<Elt>(g);
}

Word word_of(const FiniteGroup& G, const Json& key) {
    if (!key.is_array()) throw FormatError("\"key\" must be an array");
    Word w;
    for (const auto& v : key) w.push(element_at(G, v));
    return w;
}

void require_barred(const Word& w, int from) {
    for (int i = from; i < w.n; ++i)
        if (w[i] == 0) throw FormatError("identity in a barred slot");
}

Json word_json(const Word& w, int from) {
    Json a = Json::array();
    for (int i = from; i < w.n; ++i) a.push_back(static_cast<int>(w[i]));
    return a;
}

Json identity_json(const IdentityResult& i) {
    Json j{{"name", i.name}, {"checked", i.checked}, {"failures", i.failures}, {"pass", i.pass()}};
    if (i.expect_failure) j["expect_failure"] = true;
    if (!i.witness.empty()) j["witness"] = i.witness;
    return j;
}

}  // namespace

Json to_json(const Scalar& s) {
    if (!s.field().is_rational()) return s.small_numerator();
    mpq_class q = s.to_mpq();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Scalar scalar_from_json(Field f, const Json& j) {
    if (j.is_number_integer()) return Scalar(f, j.get<std::int64_t>());
    if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
    throw FormatError("coefficient must be an integer or a \"num/den\" string");
}

Json to_json(const FiniteGroup& G) { return Json{{"name", G.name()}, {"order", G.order()}, {"table", G.table()}}; }

FiniteGroup group_from_json(const Json& j) {
    if (j.is_string()) return FiniteGroup::preset(j.get<std::string>());
    if (!j.contains("table")) {
        if (j.contains("name")) return FiniteGroup::preset(j.at("name").get<std::string>());
        throw FormatError("group needs a \"table\" or a preset \"name\"");
    }
    auto table = j.at("table").get<std::vector<std::vector<int>>>();
    if (j.contains("order") && j.at("order").get<int>() != static_cast<int>(table.size()))
        throw FormatError("\"order\" does not match the table");
    return FiniteGroup::from_table(table, j.value("name", std::string("custom")));
}

Json conjugacy_json(const ConjugacyData& cd) {
    Json classes = Json::array();
    for (int c = 0; c < cd.num_classes(); ++c) {
        auto ints = [](const std::vector<Elt>& v) {
            std::vector<int> out(v.begin(), v.end());
            return out;
        };
        classes.push_back(Json{{"index", c},
                               {"rep", static_cast<int>(cd.rep(c))},
                               {"size", cd.class_size(c)},
                               {"elements", ints(cd.conjugates(c))},
                               {"centralizer", ints(cd.centralizer(c))},
                               {"coset_reps", ints(cd.coset_reps(c))}});
    }
    const auto& G = cd.group();
    return Json{{"name", G.name()}, {"order", G.order()}, {"abelian", G.is_abelian()}, {"classes", classes}};
}

Json to_json(const TateElement& e) {
    Json terms = Json::array();
    if (e.degree < 0) {
        for (const auto& [k, c] : e.terms) terms.push_back(Json{{"key", word_json(unpack(k), 0)}, {"coeff", to_json(c)}});
    } else {
        // keys end in the value; group by the tuple in front of it
        std::map<std::vector<int>, Json> grouped;
        for (const auto& [k, c] : e.terms) {
            Word w = unpack(k);
            std::vector<int> tuple(w.v, w.v + w.n - 1);
            auto& slot = grouped[tuple];
            if (slot.is_null()) slot = Json::array();
            slot.push_back(Json{{"element", static_cast<int>(w[w.n - 1])}, {"coeff", to_json(c)}});
        }
        for (auto& [tuple, value] : grouped) terms.push_back(Json{{"key", tuple}, {"value", value}});
    }
    return Json{{"kind", "tate"}, {"field", e.field.name()}, {"degree", e.degree}, {"terms", terms}};
}

Json to_json(const DecomposedElement& e) {
    Json terms = Json::array();
    for (const auto& [k, c] : e.terms) {
        Word w = unpack(k);
        terms.push_back(Json{{"class", static_cast<int>(w[0])}, {"key", word_json(w, 1)}, {"coeff", to_json(c)}});
    }
    return Json{{"kind", "decomposed"}, {"field", e.field.name()}, {"degree", e.degree}, {"terms", terms}};
}

Json to_json(const AbelianCochain& e) {
    Json terms = Json::array();
    for (const auto& [k, c] : e.terms) terms.push_back(Json{{"key", word_json(unpack(k), 0)}, {"coeff", to_json(c)}});
    return Json{{"kind", "abelian"}, {"field", e.field.name()}, {"degree", e.degree}, {"terms", terms}};
}

std::string element_kind(const Json& j) {
    if (!j.is_object()) throw FormatError("element must be a JSON object");
    if (j.contains("kind")) {
        auto k = j.at("kind").get<std::string>();
        if (k != "tate" && k != "decomposed" && k != "abelian") throw FormatError("unknown element kind '" + k + "'");
        return k;
    }
    for (const auto& t : terms_of(j))
        if (t.contains("class")) return "decomposed";
    return "tate";
}

TateElement tate_from_json(const FiniteGroup& G, const Json& j, Field fallback) {
    if (element_kind(j) != "tate") throw FormatError("expected a Tate element");
    const Field f = field_of(j, fallback);
    const int d = degree_of(j);
    Accumulator acc(f);
    for (const auto& t : terms_of(j)) {
        Word w = word_of(G, t.at("key"));
        if (d < 0) {
            if (w.n != -d) throw FormatError("chain of degree " + std::to_string(d) + " needs " + std::to_string(-d) + " entries");
            require_barred(w, 1);
            acc.add(w, scalar_from_json(f, t.at("coeff")));
            continue;
        }
        if (w.n != d) throw FormatError("cochain of degree " + std::to_string(d) + " needs a " + std::to_string(d) + "-tuple");
        require_barred(w, 0);
        if (!t.contains("value") || !t.at("value").is_array()) throw FormatError("cochain terms carry a \"value\" array");
        for (const auto& v : t.at("value")) {
            Word full = w;
            full.push(element_at(G, v.at("element")));
            acc.add(full, scalar_from_json(f, v.at("coeff")));
        }
    }
    return TateElement(d, f, acc.finish());
}

DecomposedElement decomposed_from_json(const ConjugacyData& cd, const Json& j, Field fallback) {
    if (element_kind(j) != "decomposed") throw FormatError("expected a decomposed element");
    const Field f = field_of(j, fallback);
    const int d = degree_of(j);
    Accumulator acc(f);
    for (const auto& t : terms_of(j)) {
        int c = t.at("class").get<int>();
        if (c < 0 || c >= cd.num_classes()) throw FormatError("class index " + std::to_string(c) + " out of range");
        Word h = word_of(cd.group(), t.at("key"));
        if (h.n != tuple_length(d)) throw FormatError("degree " + std::to_string(d) + " needs " + std::to_string(tuple_length(d)) + " entries");
        Word w;
        w.push(static_cast<Elt>(c));
        for (int i = 0; i < h.n; ++i) {
            if (h[i] == 0) throw FormatError("identity in a barred slot");
            if (!cd.centralizes(c, h[i])) throw FormatError("entry " + std::to_string(h[i]) + " is not in the centralizer of class " + std::to_string(c));
            w.push(h[i]);
        }
        acc.add(w, scalar_from_json(f, t.at("coeff")));
    }
    return DecomposedElement(d, f, acc.finish());
}

AbelianCochain abelian_from_json(const FiniteGroup& G, const Json& j, Field fallback) {
    if (element_kind(j) != "abelian") throw FormatError("expected an abelian cochain");
    const Field f = field_of(j, fallback);
    const int d = degree_of(j);
    Accumulator acc(f);
    for (const auto& t : terms_of(j)) {
        Word w = word_of(G, t.at("key"));
        if (w.n != tuple_length(d)) throw FormatError("degree " + std::to_string(d) + " needs " + std::to_string(tuple_length(d)) + " entries");
        require_barred(w, 0);
        acc.add(w, scalar_from_json(f, t.at("coeff")));
    }
    return AbelianCochain(d, f, acc.finish());
}

Json to_json(const Report& r, ReportFormat fmt) {
    Json ids = Json::array();
    for (const auto& i : r.identities) ids.push_back(identity_json(i));
    Json j{{"check", r.check}, {"pass", r.pass()}, {"identities", ids}};
    if (!r.group.empty()) {
        j["group"] = r.group;
        j["field"] = r.field;
        j["window"] = {r.lo, r.hi};
        j["seed"] = r.seed;
        j["samples"] = r.samples;
    }
    if (fmt.timing) j["seconds"] = r.seconds;
    return j;
}

Json to_json(const std::vector<Report>& rs, ReportFormat fmt) {
    Json a = Json::array();
    bool all = !rs.empty();
    for (const auto& r : rs) {
        a.push_back(to_json(r, fmt));
        all = all && r.pass();
    }
    return Json{{"pass", all}, {"reports", a}};
}

}  // namespace tate
