#include "branchkit/json_io.hpp"

#include <charconv>
#include <limits>

#include "branchkit/errors.hpp"

namespace branchkit {

Json to_json(const Integer& x) {
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
        return Json(static_cast<std::int64_t>(x));
    return Json(x.str());
}

Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return Integer(j.get<std::string>());
        } catch (const std::exception&) {
        }
    }
    throw validation_error("not an integer: " + j.dump());
}

namespace {

Json ints(std::span<const int> v) { return Json(std::vector<int>(v.begin(), v.end())); }

std::vector<int> int_list(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array()) throw validation_error(std::string("missing array \"") + key + "\"");
    std::vector<int> out;
    for (const auto& x : j[key]) {
        if (!x.is_number_integer()) throw validation_error(std::string("non-integer entry in \"") + key + "\"");
        out.push_back(x.get<int>());
    }
    return out;
}

int int_field(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw validation_error(std::string("missing integer \"") + key + "\"");
    return j[key].get<int>();
}

template <class VC>
Json terms_of(const VC& vc, const char* key) {
    Json arr = Json::array();
    for (const auto& [l, c] : vc.terms()) arr.push_back(Json{{key, to_json(l)}, {"coef", to_json(c)}});
    return arr;
}

}  // namespace

Json to_json(const KMLabel& l) {
    const auto& f = l.family();
    if (f.is_su()) return Json{{"mu1", ints(l.mu1())}, {"mu2", ints(l.mu2())}, {"p", l.p()}};
    if (f.is_soe()) return Json{{"q", l.q()}, {"mu", ints(l.mu())}};
    return Json{{"nu", ints(l.nu())}, {"p", l.p()}};
}

Json to_json(const KWeight& w) {
    const auto& f = w.family();
    if (f.is_su()) return Json{{"lambda1", ints(w.lambda1())}, {"lambda2", ints(w.lambda2())}};
    if (f.is_soe()) return Json{{"p", w.p()}, {"lambda", ints(w.lambda())}};
    return Json{{"lambda", ints(w.lambda())}};
}

Json terms_json(const VirtualChar& vc) { return terms_of(vc, "label"); }
Json terms_json(const KVirtualChar& vc) { return terms_of(vc, "weight"); }

Json to_json(const VirtualChar& vc) { return Json{{"family", vc.family().str()}, {"terms", terms_json(vc)}}; }
Json to_json(const KVirtualChar& vc) { return Json{{"family", vc.family().str()}, {"terms", terms_json(vc)}}; }

Json to_json(const Certificate& c) {
    Json j{{"functional", c.functional}};
    if (c.functional == "parity") {
        j["mu"] = c.mu;
        j["parity"] = c.parity;
    }
    j["value"] = to_json(c.value);
    return j;
}

Json to_json(const MembershipResult& r) {
    Json j{{"status", to_string(r.status)}};
    if (r.witness) j["witness"] = terms_json(*r.witness);
    if (r.certificate) j["certificate"] = to_json(*r.certificate);
    if (r.status == MemberStatus::Unknown) j["radius"] = r.radius;
    return j;
}

Json to_json(const GroupFamily& f, const WeylTerm& t) {
    return Json{{"w", t.elem.str(f)}, {"sign", t.sign}, {"label", to_json(t.label)}, {"c_hat", t.c_hat}};
}

Json to_json(const CGroup& g) {
    Json members = Json::array();
    for (const auto& e : g.members) members.push_back(e.str(g.sum.family()));
    return Json{{"key", g.key}, {"members", members}, {"sum", terms_json(g.sum)}};
}

Json to_json(const KWeight& w, const Verdict& v) {
    Json j{{"verdict", to_string(v.status)}};
    if (v.key) j["key"] = *v.key;
    if (v.certificate) j["certificate"] = to_json(*v.certificate);
    j["reason"] = v.reason;
    j["lambda"] = to_json(w);
    Json groups = Json::array();
    for (size_t k = 0; k < v.groups.size(); ++k) {
        Json g = to_json(v.groups[k]);
        if (k < v.checks.size()) {
            const auto& c = v.checks[k];
            g["status"] = to_string(c.membership.status);
            if (c.invariant) g["I"] = to_json(*c.invariant);
            if (c.membership.witness) g["witness"] = terms_json(*c.membership.witness);
            if (c.membership.certificate) g["certificate"] = to_json(*c.membership.certificate);
        }
        groups.push_back(std::move(g));
    }
    j["groups"] = std::move(groups);
    return j;
}

Json to_json(const ExploreRow& row) {
    Json groups = Json::array();
    for (size_t k = 0; k < row.groups.size(); ++k) {
        Json g = to_json(row.groups[k]);
        g["status"] = to_string(row.statuses[k]);
        groups.push_back(std::move(g));
    }
    return Json{{"lambda", to_json(row.lambda)}, {"groups", groups}, {"verdict", to_string(row.verdict)}};
}

KMLabel label_from_json(const GroupFamily& f, const Json& j) {
    if (!j.is_object()) throw validation_error("label must be an object: " + j.dump());
    if (f.is_su()) return KMLabel::su(f, int_list(j, "mu1"), int_list(j, "mu2"), int_field(j, "p"));
    if (f.is_soe()) return KMLabel::soe(f, int_field(j, "q"), int_list(j, "mu"));
    return KMLabel::sostar(f, int_list(j, "nu"), int_field(j, "p"));
}

KWeight weight_from_json(const GroupFamily& f, const Json& j) {
    if (!j.is_object()) throw validation_error("weight must be an object: " + j.dump());
    if (f.is_su()) return KWeight::su(f, int_list(j, "lambda1"), int_list(j, "lambda2"));
    if (f.is_soe()) return KWeight::soe(f, int_field(j, "p"), int_list(j, "lambda"));
    return KWeight::sostar(f, int_list(j, "lambda"));
}

VirtualChar virtual_char_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("family") || !j["family"].is_string() || !j.contains("terms") ||
        !j["terms"].is_array())
        throw validation_error("virtual character needs \"family\" and \"terms\"");
    const auto f = GroupFamily::parse(j["family"].get<std::string>());
    VirtualChar vc(f);
    for (const auto& t : j["terms"]) {
        if (!t.contains("label") || !t.contains("coef")) throw validation_error("term needs \"label\" and \"coef\"");
        vc.add(label_from_json(f, t["label"]), integer_from_json(t["coef"]));
    }
    return vc;
}

// ---- literals ----

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

int parse_int(std::string_view tok) {
    tok = trim(tok);
    int v = 0;
    const char* b = tok.data();
    const char* e = b + tok.size();
    if (!tok.empty() && *b == '+') ++b;
    auto [ptr, ec] = std::from_chars(b, e, v);
    if (tok.empty() || ec != std::errc() || ptr != e) throw validation_error("bad integer token '" + std::string(tok) + "'");
    return v;
}

std::vector<int> parse_list(std::string_view s) {
    std::vector<int> out;
    if (trim(s).empty()) return out;
    size_t start = 0;
    for (;;) {
        const size_t comma = s.find(',', start);
        out.push_back(parse_int(s.substr(start, comma == std::string_view::npos ? s.npos : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    size_t start = 0;
    for (;;) {
        const size_t k = s.find(sep, start);
        out.push_back(s.substr(start, k == std::string_view::npos ? s.npos : k - start));
        if (k == std::string_view::npos) break;
        start = k + 1;
    }
    return out;
}

// "name=<int>;rest"
std::pair<int, std::string_view> prefixed(std::string_view text, std::string_view name) {
    const auto t = trim(text);
    const size_t semi = t.find(';');
    if (semi == std::string_view::npos) throw validation_error("expected '" + std::string(name) + "=<int>;...' in '" + std::string(t) + "'");
    auto head = trim(t.substr(0, semi));
    if (head.substr(0, name.size() + 1) != std::string(name) + "=")
        throw validation_error("expected '" + std::string(name) + "=' in '" + std::string(head) + "'");
    return {parse_int(head.substr(name.size() + 1)), t.substr(semi + 1)};
}

}  // namespace

KWeight parse_weight(const GroupFamily& f, std::string_view text) {
    if (f.is_soe()) {
        auto [p, rest] = prefixed(text, "p");
        return KWeight::soe(f, p, parse_list(rest));
    }
    const auto parts = split(trim(text), '|');
    if (f.is_su()) {
        if (parts.size() != 2) throw validation_error("SU weight needs 'lambda1|lambda2', got '" + std::string(text) + "'");
        return KWeight::su(f, parse_list(parts[0]), parse_list(parts[1]));
    }
    if (parts.size() != 1) throw validation_error("SO* weight is a single list, got '" + std::string(text) + "'");
    return KWeight::sostar(f, parse_list(parts[0]));
}

KMLabel parse_label(const GroupFamily& f, std::string_view text) {
    if (f.is_soe()) {
        auto [q, rest] = prefixed(text, "q");
        return KMLabel::soe(f, q, parse_list(rest));
    }
    const auto parts = split(trim(text), '|');
    if (f.is_su()) {
        if (parts.size() != 3) throw validation_error("SU label needs 'mu1|mu2|p', got '" + std::string(text) + "'");
        return KMLabel::su(f, parse_list(parts[0]), parse_list(parts[1]), parse_int(parts[2]));
    }
    if (parts.size() != 2) throw validation_error("SO* label needs 'nu|p', got '" + std::string(text) + "'");
    return KMLabel::sostar(f, parse_list(parts[0]), parse_int(parts[1]));
}

VirtualChar parse_virtual_char(const GroupFamily& f, std::string_view text) {
    VirtualChar vc(f);
    for (auto term : split(text, '+')) {
        term = trim(term);
        if (term.empty()) throw validation_error("empty term in '" + std::string(text) + "'");
        Integer coef = 1;
        const size_t star = term.find('*');
        if (star != std::string_view::npos) {
            coef = parse_int(term.substr(0, star));
            term = term.substr(star + 1);
        }
        vc.add(parse_label(f, term), coef);
    }
    return vc;
}

std::string flat(std::span<const int> coords) {
    std::string out;
    for (size_t i = 0; i < coords.size(); ++i) {
        if (i) out += ':';
        out += std::to_string(coords[i]);
    }
    return out;
}

}  // namespace branchkit
