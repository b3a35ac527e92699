#include "branchkit/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>

#include <CLI11.hpp>

#include "branchkit/acceptance.hpp"
#include "branchkit/ansatz.hpp"
#include "branchkit/branching.hpp"
#include "branchkit/char_engine.hpp"
#include "branchkit/errors.hpp"
#include "branchkit/grids.hpp"
#include "branchkit/json_io.hpp"

namespace branchkit {

namespace {

struct CliConfig {
    std::string family;
    std::string weight;
    std::vector<std::string> labels;
    std::string target;
    std::string target_json;
    std::string format = "json";
    std::string method = "auto";
    int power = 1;
    int radius = 1;
    int bound = 1;
    int n = 5;
    int jobs = 1;
    std::optional<int> p_min, p_max;
    std::optional<long> max_generators;
    bool witnesses = false;
    std::vector<int> only;
};

struct Output {
    std::ostream& out;
    bool tsv;

    void json(const Json& j) const { out << j.dump() << '\n'; }
    void row(const std::vector<std::string>& cols) const {
        for (size_t i = 0; i < cols.size(); ++i) out << (i ? "\t" : "") << cols[i];
        out << '\n';
    }
};

std::string coords_of(const KMLabel& l) { return flat(l.coords()); }
std::string coords_of(const KWeight& w) { return flat(w.coords()); }

template <class VC>
void print_char(const Output& o, const VC& vc) {
    if (!o.tsv) {
        o.json(to_json(vc));
        return;
    }
    for (const auto& [l, c] : vc.terms()) o.row({coords_of(l), c.str()});
}

VirtualChar read_target(const GroupFamily& f, const CliConfig& c) {
    if (!c.target_json.empty()) {
        Json j;
        try {
            j = Json::parse(c.target_json);
        } catch (const Json::parse_error& e) {
            throw validation_error(std::string("bad --target-json: ") + e.what());
        }
        auto vc = virtual_char_from_json(j);
        if (vc.family() != f) throw validation_error("--target-json family " + vc.family().str() + " != " + f.str());
        return vc;
    }
    if (!c.target.empty()) return parse_virtual_char(f, c.target);
    if (c.labels.size() == 1) return VirtualChar(f, parse_label(f, c.labels.front()));
    throw validation_error("need --target, --target-json or one --label");
}

std::vector<KWeight> scan_grid(const GroupFamily& f, const CliConfig& c) {
    if (f.is_su()) return su_weights(f, c.bound);
    if (f.is_soe()) return soe_weights(f.n(), c.bound, c.p_min.value_or(-2), c.p_max.value_or(2 * f.n() + 2));
    return sostar_weights(f.n(), c.bound);
}

int cmd_branch(const GroupFamily& f, const CliConfig& c, const Output& o) {
    const auto w = parse_weight(f, c.weight);
    const auto vc = branch(w);
    if (o.tsv) {
        print_char(o, vc);
        return exit_ok;
    }
    Json raw = Json::array();
    for (const auto& [l, coef] : branch_raw(w))
        raw.push_back(Json{{"label", to_json(l)}, {"coef", to_json(coef)}, {"canonical", to_json(canonical_km(l))}});
    o.json(Json{{"family", f.str()}, {"weight", to_json(w)}, {"raw", raw}, {"terms", terms_json(vc)}});
    return exit_ok;
}

int cmd_weyl(const GroupFamily& f, const CliConfig& c, const Output& o) {
    const auto w = parse_weight(f, c.weight);
    const auto terms = weyl_terms(w);
    if (o.tsv) {
        for (const auto& t : terms)
            o.row({t.elem.str(f), std::to_string(t.sign), coords_of(t.label), std::to_string(t.c_hat)});
        return exit_ok;
    }
    Json arr = Json::array();
    for (const auto& t : terms) {
        Json j = to_json(f, t);
        j["lambda_w"] = lambda_w(w, t.elem);
        arr.push_back(std::move(j));
    }
    o.json(Json{{"family", f.str()}, {"weight", to_json(w)}, {"terms", arr}});
    return exit_ok;
}

int cmd_star(const GroupFamily& f, const CliConfig& c, const Output& o) {
    const auto w = parse_weight(f, c.weight);
    const auto groups = star_groups(w);
    if (o.tsv) {
        for (const auto& g : groups)
            for (const auto& [l, coef] : g.sum.terms()) o.row({std::to_string(g.key), coords_of(l), coef.str()});
        return exit_ok;
    }
    Json arr = Json::array();
    for (const auto& g : groups) arr.push_back(to_json(g));
    o.json(Json{{"family", f.str()}, {"weight", to_json(w)}, {"groups", arr}});
    return exit_ok;
}

std::vector<std::string> verdict_row(const KWeight& w, const Verdict& v) {
    return {coords_of(w), to_string(v.status), v.key ? std::to_string(*v.key) : "",
            v.certificate ? v.certificate->value.str() : ""};
}

int cmd_good(const GroupFamily& f, const CliConfig& c, const Output& o) {
    const auto w = parse_weight(f, c.weight);
    const auto v = is_good(w, AnsatzOptions{c.radius, c.witnesses});
    if (o.tsv) o.row(verdict_row(w, v));
    else o.json(to_json(w, v));
    return v.status == VerdictStatus::Good ? exit_ok : exit_failure;
}

int cmd_scan(const GroupFamily& f, const CliConfig& c, const Output& o) {
    scan(scan_grid(f, c), AnsatzOptions{c.radius, c.witnesses}, c.jobs, [&](const KWeight& w, const Verdict& v) {
        if (o.tsv) o.row(verdict_row(w, v));
        else o.json(to_json(w, v));
        o.out.flush();
    });
    return exit_ok;
}

int cmd_preimage(const GroupFamily& f, const CliConfig& c, const Output& o) {
    const auto target = read_target(f, c);
    const auto pre = preimage_su1n(target);
    if (o.tsv) print_char(o, pre);
    else o.json(Json{{"family", f.str()}, {"target", terms_json(target)}, {"preimage", terms_json(pre)},
                     {"round_trip", branch(pre) == target}});
    return exit_ok;
}

int cmd_invariant(const GroupFamily& f, const CliConfig& c, const Output& o) {
    const auto target = read_target(f, c);
    const auto v = invariant_I(target);
    if (o.tsv) o.row({v.str()});
    else o.json(Json{{"family", f.str()}, {"I", to_json(v)}});
    return exit_ok;
}

int cmd_member(const GroupFamily& f, const CliConfig& c, const Output& o) {
    const auto target = read_target(f, c);
    MembershipResult r;
    std::string method = c.method;
    if (method == "auto") {
        if (f.is_soe()) method = "soe";
        else if (f.is_su() && (f.m() == 1 || f.n() == 1)) method = "preimage";
        else method = "lattice";
    }
    if (method == "soe") {
        r = member_soe(target);
    } else if (method == "preimage") {
        r.status = MemberStatus::Member;
        r.witness = preimage_su1n(target);
    } else {
        r = lattice_member(target, c.radius);
    }
    if (o.tsv) o.row({to_string(r.status), r.certificate ? r.certificate->value.str() : ""});
    else {
        Json j{{"method", method}};
        j.update(to_json(r));
        o.json(j);
    }
    return r.status == MemberStatus::Member ? exit_ok : exit_failure;
}

int cmd_decompose(const GroupFamily& f, const CliConfig& c, const Output& o, bool tensor) {
    VirtualChar vc(f);
    if (tensor) {
        if (c.labels.size() != 2) throw validation_error("decompose tensor needs two --label");
        vc = tensor_labels(parse_label(f, c.labels[0]), parse_label(f, c.labels[1]));
    } else {
        if (c.labels.size() != 1) throw validation_error("decompose exterior needs one --label");
        vc = exterior_label(parse_label(f, c.labels[0]), c.power);
    }
    print_char(o, vc);
    return exit_ok;
}

int cmd_explore(const CliConfig& c, const Output& o) {
    explore_sostar(c.n, c.bound, c.radius, c.jobs, [&](const ExploreRow& r) {
        if (o.tsv) {
            std::string keys, statuses;
            for (size_t k = 0; k < r.groups.size(); ++k) {
                keys += (k ? ":" : "") + std::to_string(r.groups[k].key);
                statuses += (k ? ":" : "") + to_string(r.statuses[k]);
            }
            o.row({coords_of(r.lambda), keys, statuses, to_string(r.verdict)});
        } else {
            o.json(to_json(r));
        }
        o.out.flush();
    });
    return exit_ok;
}

int cmd_verify(const CliConfig& c, const Output& o) {
    bool ok = true;
    run_acceptance(AcceptanceOptions{c.jobs, true, c.only}, [&](const CriterionResult& r) {
        o.out << format_result(r) << std::endl;
        ok = ok && r.passed;
    });
    return ok ? exit_ok : exit_failure;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CliConfig c;
    CLI::App app{"Branching laws, Weyl terms and good-weight classification for SU(m,n), SO_0(2,2n), SO*(2n)",
                 "branchkit"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    auto add_family = [&](CLI::App* s) {
        s->add_option("--family", c.family, "su:m,n | soe:n | sostar:n")->required();
    };
    auto add_format = [&](CLI::App* s) {
        s->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "tsv"}));
    };
    auto add_weight = [&](CLI::App* s) {
        s->add_option("--weight", c.weight, "weight literal, e.g. \"1,0|0\", \"p=2;1,1\", \"1,0,0\"")->required();
    };
    auto add_target = [&](CLI::App* s) {
        s->add_option("--label", c.labels, "K_M label literal, e.g. \"1,0|0|3\", \"q=1;1,0\", \"1,0|2\"");
        s->add_option("--target", c.target, "virtual character literal, e.g. \"2*q=0;1 + -1*q=2;-1\"");
        s->add_option("--target-json", c.target_json, "virtual character as JSON");
    };
    auto add_radius = [&](CLI::App* s) {
        s->add_option("--radius", c.radius, "lattice search radius")->check(CLI::NonNegativeNumber);
        s->add_option("--max-generators", c.max_generators, "generator cap (also BRANCHKIT_MAX_GENERATORS)")
            ->check(CLI::PositiveNumber);
    };
    auto add_jobs = [&](CLI::App* s) { s->add_option("--jobs", c.jobs, "worker threads")->check(CLI::PositiveNumber); };

    auto* branch_cmd = app.add_subcommand("branch", "restrict an irreducible K-representation to K_M");
    add_family(branch_cmd);
    add_weight(branch_cmd);
    add_format(branch_cmd);

    auto* decompose_cmd = app.add_subcommand("decompose", "tensor products and exterior powers of K_M labels");
    decompose_cmd->require_subcommand(1);
    auto* tensor_cmd = decompose_cmd->add_subcommand("tensor", "tensor product of two labels");
    auto* exterior_cmd = decompose_cmd->add_subcommand("exterior", "exterior power of a label");
    for (auto* s : {tensor_cmd, exterior_cmd}) {
        add_family(s);
        add_format(s);
        s->add_option("--label", c.labels, "K_M label literal")->required();
    }
    exterior_cmd->add_option("--power", c.power, "exterior degree")->required()->check(CLI::NonNegativeNumber);

    auto* weyl_cmd = app.add_subcommand("weyl", "W_kappa terms: lambda_w, labels, signs, c_hat");
    auto* star_cmd = app.add_subcommand("star", "Weyl terms grouped by |c_hat|");
    auto* good_cmd = app.add_subcommand("good", "classify a highest weight");
    for (auto* s : {weyl_cmd, star_cmd, good_cmd}) {
        add_family(s);
        add_weight(s);
        add_format(s);
    }
    add_radius(good_cmd);
    good_cmd->add_flag("--witnesses", c.witnesses, "attach preimages (SU(m,1), SU(1,n))");

    auto* scan_cmd = app.add_subcommand("scan", "classify every weight of a grid (JSON lines)");
    add_family(scan_cmd);
    add_format(scan_cmd);
    add_radius(scan_cmd);
    add_jobs(scan_cmd);
    scan_cmd->add_option("--bound", c.bound, "entries in [-bound, bound]")->check(CLI::NonNegativeNumber);
    scan_cmd->add_option("--p-min", c.p_min, "SOe: smallest p (default -2)");
    scan_cmd->add_option("--p-max", c.p_max, "SOe: largest p (default 2n+2)");
    scan_cmd->add_flag("--witnesses", c.witnesses, "attach preimages (SU(m,1), SU(1,n))");

    auto* preimage_cmd = app.add_subcommand("preimage", "explicit preimage under restriction, SU(m,1) / SU(1,n)");
    auto* invariant_cmd = app.add_subcommand("invariant", "the SU(3,2) invariant I");
    auto* member_cmd = app.add_subcommand("member", "membership in the image of restriction");
    for (auto* s : {preimage_cmd, invariant_cmd, member_cmd}) {
        add_family(s);
        add_target(s);
        add_format(s);
    }
    add_radius(member_cmd);
    member_cmd->add_option("--method", c.method, "decision procedure")
        ->check(CLI::IsMember({"auto", "soe", "preimage", "lattice"}));

    auto* explore_cmd = app.add_subcommand("explore-sostar", "SO*(2n) good-weight search (JSON lines)");
    explore_cmd->add_option("--n", c.n, "SO*(2n)")->check(CLI::Range(3, 64));
    explore_cmd->add_option("--bound", c.bound, "entries in [-bound, bound]")->check(CLI::NonNegativeNumber);
    add_radius(explore_cmd);
    add_jobs(explore_cmd);
    add_format(explore_cmd);

    auto* verify_cmd = app.add_subcommand("verify-paper", "run the acceptance checks, stop at the first failure");
    add_jobs(verify_cmd);
    verify_cmd->add_option("--only", c.only, "criterion numbers")->check(CLI::Range(1, criterion_count()));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    if (c.max_generators) setenv("BRANCHKIT_MAX_GENERATORS", std::to_string(*c.max_generators).c_str(), 1);
    const Output o{out, c.format == "tsv"};
    try {
        if (*verify_cmd) return cmd_verify(c, o);
        if (*explore_cmd) return cmd_explore(c, o);
        const auto f = GroupFamily::parse(c.family);
        if (*branch_cmd) return cmd_branch(f, c, o);
        if (*tensor_cmd) return cmd_decompose(f, c, o, true);
        if (*exterior_cmd) return cmd_decompose(f, c, o, false);
        if (*weyl_cmd) return cmd_weyl(f, c, o);
        if (*star_cmd) return cmd_star(f, c, o);
        if (*good_cmd) return cmd_good(f, c, o);
        if (*scan_cmd) return cmd_scan(f, c, o);
        if (*preimage_cmd) return cmd_preimage(f, c, o);
        if (*invariant_cmd) return cmd_invariant(f, c, o);
        if (*member_cmd) return cmd_member(f, c, o);
    } catch (const resource_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_resource;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_failure;
    }
    return exit_usage;
}

}  // namespace branchkit
