#include "hbch/json_io.hpp"

#include "hbch/error.hpp"

namespace hbch {

void to_json(json &j, const Provenance &v) {
    j = json{{"construction", construction_name(v.construction)},
             {"q", v.q},
             {"s", v.s},
             {"n1", v.n1},
             {"lambda", v.lambda},
             {"cosets", v.cosets},
             {"zero", v.include_zero},
             {"classical_dim", v.classical_dim}};
}

void from_json(const json &j, Provenance &v) {
    auto c = parse_construction(j.at("construction").get<std::string>());
    if (!c) fail(Errc::ParseError, "unknown construction");
    v.construction = *c;
    j.at("q").get_to(v.q);
    j.at("s").get_to(v.s);
    j.at("n1").get_to(v.n1);
    j.at("lambda").get_to(v.lambda);
    j.at("cosets").get_to(v.cosets);
    j.at("zero").get_to(v.include_zero);
    j.at("classical_dim").get_to(v.classical_dim);
}

void to_json(json &j, const QuantumParams &p) {
    j = json{{"q", p.q},
             {"n", p.n},
             {"k", p.k},
             {"d_designed", p.d},
             {"lengthened", p.lengthened},
             {"params", param_string(p)},
             {"provenance", p.provenance}};
}

void from_json(const json &j, QuantumParams &p) {
    j.at("q").get_to(p.q);
    j.at("n").get_to(p.n);
    j.at("k").get_to(p.k);
    j.at("d_designed").get_to(p.d);
    j.at("lengthened").get_to(p.lengthened);
    j.at("provenance").get_to(p.provenance);
}

namespace {

CaseId parse_case(const std::string &name) {
    for (CaseId id : {CaseId::C1, CaseId::C2, CaseId::C3, CaseId::C3a0, CaseId::C4}) {
        if (case_name(id) == name) return id;
    }
    fail(Errc::ParseError, "unknown case " + name);
}

}  // namespace

void to_json(json &j, const CaseDescriptor &d) {
    j = json{{"case", case_name(d.id)}, {"q", d.q}, {"s", d.s}, {"n1", d.n1}, {"excluded", d.excluded}};
    j[d.id == CaseId::C1 || d.id == CaseId::C2 ? "n2" : "a"] = d.aux;
}

void from_json(const json &j, CaseDescriptor &d) {
    d.id = parse_case(j.at("case").get<std::string>());
    j.at("q").get_to(d.q);
    j.at("s").get_to(d.s);
    j.at("n1").get_to(d.n1);
    j.at("excluded").get_to(d.excluded);
    j.at(d.id == CaseId::C1 || d.id == CaseId::C2 ? "n2" : "a").get_to(d.aux);
}

void to_json(json &j, const Witness &w) {
    j = json{{"x", w.x}, {"y", w.y}, {"k", w.k}, {"beta", w.beta}};
}

void from_json(const json &j, Witness &w) {
    j.at("x").get_to(w.x);
    j.at("y").get_to(w.y);
    j.at("k").get_to(w.k);
    j.at("beta").get_to(w.beta);
}

void to_json(json &j, const BoundResult &b) {
    j = json{{"L", b.L}, {"witness", nullptr}};
    if (b.witness) j["witness"] = *b.witness;
}

void from_json(const json &j, BoundResult &b) {
    j.at("L").get_to(b.L);
    b.witness.reset();
    if (!j.at("witness").is_null()) b.witness = j.at("witness").get<Witness>();
}

void to_json(json &j, const CaseBound &c) {
    j = json{{"descriptor", c.desc}, {"L_closed", nullptr}};
    if (c.closed) j["L_closed"] = *c.closed;
}

void from_json(const json &j, CaseBound &c) {
    j.at("descriptor").get_to(c.desc);
    c.closed.reset();
    if (!j.at("L_closed").is_null()) c.closed = j.at("L_closed").get<i64>();
}

void to_json(json &j, const BoundReport &r) {
    j = json{{"q", r.q},
             {"s", r.s},
             {"n1", r.n1},
             {"cases", r.cases},
             {"brute_force", nullptr},
             {"aly_bound", r.aly},
             {"L", r.L},
             {"source", r.source == BoundReport::Source::ClosedForm ? "closed_form" : "brute_force"},
             {"closed_forms_agree", r.closed_forms_agree},
             {"unvalidated", r.unvalidated}};
    if (r.brute) j["brute_force"] = *r.brute;
}

void from_json(const json &j, BoundReport &r) {
    j.at("q").get_to(r.q);
    j.at("s").get_to(r.s);
    j.at("n1").get_to(r.n1);
    j.at("cases").get_to(r.cases);
    r.brute.reset();
    if (!j.at("brute_force").is_null()) r.brute = j.at("brute_force").get<BoundResult>();
    j.at("aly_bound").get_to(r.aly);
    j.at("L").get_to(r.L);
    const auto src = j.at("source").get<std::string>();
    if (src == "closed_form") {
        r.source = BoundReport::Source::ClosedForm;
    } else if (src == "brute_force") {
        r.source = BoundReport::Source::BruteForce;
    } else {
        fail(Errc::ParseError, "unknown bound source " + src);
    }
    j.at("closed_forms_agree").get_to(r.closed_forms_agree);
    j.at("unvalidated").get_to(r.unvalidated);
}

json cosets_to_json(const CosetSystem &sys) {
    json list = json::array();
    for (std::size_t i = 0; i < sys.count(); ++i) {
        auto c = sys.coset(i);
        list.push_back(std::vector<std::uint32_t>(c.begin(), c.end()));
    }
    return json{{"n", sys.modulus()}, {"q", sys.q()}, {"cosets", std::move(list)}};
}

CosetSystemPtr cosets_from_json(const json &j) {
    auto sys = CosetSystem::build(j.at("n").get<u64>(), j.at("q").get<u64>());
    if (cosets_to_json(*sys).at("cosets") != j.at("cosets")) {
        fail(Errc::ParseError, "coset listing does not match n and q");
    }
    return sys;
}

}  // namespace hbch
