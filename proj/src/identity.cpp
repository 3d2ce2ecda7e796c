#include "identity.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace schurid {

namespace {

using nlohmann::json;

std::vector<Term> canonicalize(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) {
        if (!(x.a == y.a)) return canonical_less(x.a, y.a);
        return canonical_less(x.b, y.b);
    });
    std::vector<Term> out;
    for (auto& t : terms) {
        if (t.coeff == 0) continue;
        if (!out.empty() && out.back().same_factors(t)) {
            out.back().coeff += t.coeff;
            if (out.back().coeff == 0) out.pop_back();
        } else {
            out.push_back(std::move(t));
        }
    }
    return out;
}

void render_term(std::ostream& os, const Term& t, bool first) {
    long c = t.coeff;
    if (first) {
        if (c < 0) { os << "-"; c = -c; }
    } else {
        os << (c < 0 ? " - " : " + ");
        if (c < 0) c = -c;
    }
    if (c != 1) os << c << ' ';
    // s_empty is absorbed in rendering; a fully empty product is 1
    bool printed = false;
    for (const Partition* p : {&t.a, &t.b}) {
        if (p->empty()) continue;
        os << "s_{" << p->to_string() << "}";
        printed = true;
    }
    if (!printed) os << "1";
}

json term_to_json(const Term& t) {
    return json{{"coeff", t.coeff}, {"factors", json::array({t.a.parts(), t.b.parts()})}};
}

Term term_from_json(const json& j) {
    if (!j.is_object() || !j.contains("coeff") || !j.contains("factors") ||
        !j["factors"].is_array() || j["factors"].size() != 2) {
        throw schur_error(errc::parse_error, "term must be {coeff, factors:[a,b]}");
    }
    auto read_partition = [](const json& arr) {
        if (!arr.is_array()) throw schur_error(errc::parse_error, "factor must be an array");
        std::vector<int> parts;
        for (const auto& v : arr) {
            if (!v.is_number_integer()) {
                throw schur_error(errc::parse_error, "partition entries must be integers");
            }
            parts.push_back(v.get<int>());
        }
        return Partition(std::move(parts));
    };
    return Term(j["coeff"].get<long>(), read_partition(j["factors"][0]),
                read_partition(j["factors"][1]));
}

} // namespace

Term::Term(long c, Partition x, Partition y) : coeff(c), a(std::move(x)), b(std::move(y)) {
    // the part-wise greater factor comes first
    if (std::lexicographical_compare(a.parts().begin(), a.parts().end(),
                                     b.parts().begin(), b.parts().end())) {
        std::swap(a, b);
    }
}

bool operator==(const Term& x, const Term& y) {
    return x.coeff == y.coeff && x.a == y.a && x.b == y.b;
}

Identity::Identity(std::vector<Term> lhs, std::vector<Term> rhs)
    : lhs_(canonicalize(std::move(lhs))), rhs_(canonicalize(std::move(rhs))) {
    for (const auto* side : {&lhs_, &rhs_}) {
        for (const auto& t : *side) {
            long d = t.a.weight() + t.b.weight();
            if (degree_ == -1) degree_ = d;
            if (d != degree_) {
                throw schur_error(errc::internal, "identity is not homogeneous");
            }
        }
    }
}

std::string Identity::to_json() const {
    json j;
    j["lhs"] = json::array();
    j["rhs"] = json::array();
    for (const auto& t : lhs_) j["lhs"].push_back(term_to_json(t));
    for (const auto& t : rhs_) j["rhs"].push_back(term_to_json(t));
    return j.dump();
}

std::string Identity::to_latex() const {
    std::ostringstream os;
    auto side = [&os](const std::vector<Term>& terms) {
        if (terms.empty()) { os << "0"; return; }
        for (std::size_t i = 0; i < terms.size(); ++i) render_term(os, terms[i], i == 0);
    };
    side(lhs_);
    os << " = ";
    side(rhs_);
    return os.str();
}

Identity Identity::from_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("lhs") || !j.contains("rhs") ||
        !j["lhs"].is_array() || !j["rhs"].is_array()) {
        throw schur_error(errc::parse_error, "identity must be {lhs:[...], rhs:[...]}");
    }
    std::vector<Term> lhs, rhs;
    for (const auto& t : j["lhs"]) lhs.push_back(term_from_json(t));
    for (const auto& t : j["rhs"]) rhs.push_back(term_from_json(t));
    return Identity(std::move(lhs), std::move(rhs));
}

} // namespace schurid
