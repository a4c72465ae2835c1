// Command-line surface for the gdet shared library. Talks to the library
// exclusively through the C API in gdet/gdet.h.
//
// Exit codes: 0 success/achievable, 1 usage or input-range error,
// 2 not achievable (check/witness), 3 scan violations, 4 internal invariant
// violation.

#include <cstdlib>
#include <cstring>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gdet/gdet.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNotAchievable = 2;
constexpr int kExitScanViolations = 3;
constexpr int kExitInternal = 4;

struct FreeString {
    void operator()(char* s) const { gdet_string_free(s); }
};
using OwnedString = std::unique_ptr<char, FreeString>;

struct GroupDeleter {
    void operator()(gdet_group* g) const { gdet_group_destroy(g); }
};
using OwnedGroup = std::unique_ptr<gdet_group, GroupDeleter>;

int status_exit_code(gdet_status s) {
    switch (s) {
        case GDET_OK: return kExitOk;
        case GDET_ERROR_INVALID_ARGUMENT: return kExitUsage;
        case GDET_ERROR_UNSUPPORTED_RANGE: return kExitUsage;
        case GDET_ERROR_INTERNAL: return kExitInternal;
    }
    return kExitInternal;
}

[[noreturn]] void die(gdet_status s) {
    json rec{{"error", gdet_last_error()}, {"status", int(s)}};
    std::cerr << rec.dump() << "\n";
    std::exit(status_exit_code(s));
}

std::vector<std::string> split_ints(const std::string& list) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(list);
    while (std::getline(in, item, ',')) {
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front())))
            item.erase(item.begin());
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back())))
            item.pop_back();
        out.push_back(item);
    }
    return out;
}

std::vector<const char*> c_view(const std::vector<std::string>& v) {
    std::vector<const char*> out;
    out.reserve(v.size());
    for (const auto& s : v) out.push_back(s.c_str());
    return out;
}

OwnedGroup open_group(const std::string& id) {
    gdet_group* raw = nullptr;
    if (gdet_status s = gdet_group_create(id.c_str(), &raw); s != GDET_OK) die(s);
    return OwnedGroup(raw);
}

int resolve_workers(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("GDET_WORKERS")) {
        const int w = std::atoi(env);
        if (w > 0) return w;
    }
    return 0;  // library default: hardware concurrency
}

void print_record(const json& rec, bool as_json) {
    if (as_json) {
        std::cout << rec.dump() << "\n";
        return;
    }
    for (const auto& [key, value] : rec.items()) {
        if (key == "command") continue;
        std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
                  << "\n";
    }
}

template <class Fn>
json take_json(Fn&& call) {
    char* raw = nullptr;
    if (gdet_status s = call(&raw); s != GDET_OK) die(s);
    OwnedString owned(raw);
    return json::parse(std::string(owned.get()));
}

int verdict_exit(const json& rec) {
    return rec.at("verdict") == "achievable" ? kExitOk : kExitNotAchievable;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "gdet - integer group determinants for SmallGroup(16,13).\n"
        "Coefficient lists are a0..a3,b0..b3,c0..c3,d0..d3, the blocks of\n"
        "F(X,Y,Z) = f(Z) + g(Z)X + h(Z)Y + t(Z)XY with f(z) = a0+a1 z+a2 z^2+a3 z^3\n"
        "and likewise g (b), h (c), t (d). For det over other groups the list is\n"
        "indexed by group element in the documented canonical order."};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(gdet_version()));
    bool as_json = false;
    app.add_flag("--json", as_json, "emit one JSON record per result");

    std::string coeffs, group_id = "sg16_13", n_str, box = "-1:1", family, m_str, k_str;
    uint64_t budget = 0, seed = 1, trials = 1000000;
    int workers = 0;
    int64_t bound = 50, value_bound = 0;

    auto* det = app.add_subcommand("det", "exact Cayley-matrix determinant (oracle path)");
    det->add_option("--coeffs", coeffs, "comma-separated integer coefficients")->required();
    det->add_option("--group", group_id, "sg16_13 | z2xd8 | z2cubed");

    auto* factored = app.add_subcommand("factored", "factored evaluation M*A^2 over sg16_13");
    factored->add_option("--coeffs", coeffs, "16 comma-separated integers")->required();

    auto* check = app.add_subcommand("check", "classify n per the achievability theorem");
    check->add_option("--n", n_str, "integer to classify")->required();

    auto* wit = app.add_subcommand("witness", "verified witness tuple for an achievable n");
    wit->add_option("--n", n_str, "target integer");
    wit->add_option("--family", family, "explicit family instead of dispatch on n");
    wit->add_option("--m", m_str, "family parameter m");
    wit->add_option("--k", k_str, "family parameter k (odd_5family / odd_3family)");

    auto* scan = app.add_subcommand("scan", "enumerate a coefficient box and verify every value");
    scan->add_option("--box", box, "per-coefficient range lo:hi (default -1:1)");
    scan->add_option("--group", group_id, "sg16_13 | z2xd8");
    scan->add_option("--budget", budget, "max candidates before switching to sampling");
    scan->add_option("--seed", seed, "sampling seed");
    scan->add_option("--workers", workers, "worker threads (default: GDET_WORKERS or hardware)");
    scan->add_option("--value-bound", value_bound, "list distinct values only below this bound");

    auto* ident = app.add_subcommand("identities", "property-check the proof identities");
    ident->add_option("--trials", trials, "number of random tuples");
    ident->add_option("--bound", bound, "coefficient bound");
    ident->add_option("--seed", seed, "rng seed");

    auto* self = app.add_subcommand("selftest", "run the built-in example battery");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    if (det->parsed()) {
        auto group = open_group(group_id);
        const auto items = split_ints(coeffs);
        const auto view = c_view(items);
        char* raw = nullptr;
        const gdet_status s = gdet_determinant(group.get(), view.data(), view.size(), &raw);
        if (s != GDET_OK) die(s);
        OwnedString value(raw);
        if (as_json) {
            json rec{{"command", "det"}, {"group", group_id}, {"coeffs", items},
                     {"value", value.get()}};
            std::cout << rec.dump() << "\n";
        } else {
            std::cout << value.get() << "\n";
        }
        return kExitOk;
    }

    if (factored->parsed()) {
        const auto items = split_ints(coeffs);
        const auto view = c_view(items);
        const json rec =
            take_json([&](char** out) { return gdet_factored(view.data(), view.size(), out); });
        print_record(rec, as_json);
        return rec.at("oracle_match").get<bool>() ? kExitOk : kExitInternal;
    }

    if (check->parsed()) {
        const json rec = take_json([&](char** out) { return gdet_check(n_str.c_str(), out); });
        print_record(rec, as_json);
        return verdict_exit(rec);
    }

    if (wit->parsed()) {
        if (!family.empty()) {
            if (m_str.empty()) {
                std::cerr << "witness --family requires --m\n";
                return kExitUsage;
            }
            const json rec = take_json([&](char** out) {
                return gdet_witness_family(family.c_str(), m_str.c_str(),
                                           k_str.empty() ? nullptr : k_str.c_str(), out);
            });
            print_record(rec, as_json);
            return kExitOk;
        }
        if (n_str.empty()) {
            std::cerr << "witness requires --n or --family\n";
            return kExitUsage;
        }
        const json rec = take_json([&](char** out) { return gdet_witness(n_str.c_str(), out); });
        print_record(rec, as_json);
        return verdict_exit(rec);
    }

    if (scan->parsed()) {
        const auto sep = box.find(':');
        if (sep == std::string::npos) {
            std::cerr << "scan --box expects lo:hi\n";
            return kExitUsage;
        }
        int64_t lo, hi;
        try {
            lo = std::stoll(box.substr(0, sep));
            hi = std::stoll(box.substr(sep + 1));
        } catch (const std::exception&) {
            std::cerr << "scan --box expects integer lo:hi\n";
            return kExitUsage;
        }
        const json rec = take_json([&](char** out) {
            return gdet_scan(group_id.c_str(), lo, hi, budget, seed, resolve_workers(workers),
                             value_bound, out);
        });
        print_record(rec, as_json);
        return rec.at("violations").get<uint64_t>() == 0 ? kExitOk : kExitScanViolations;
    }

    if (ident->parsed()) {
        const json rec =
            take_json([&](char** out) { return gdet_identities(trials, bound, seed, out); });
        print_record(rec, as_json);
        return rec.at("failures").get<uint64_t>() == 0 ? kExitOk : kExitInternal;
    }

    if (self->parsed()) {
        const json rec = take_json([](char** out) { return gdet_selftest(out); });
        print_record(rec, as_json);
        return rec.at("failed").get<int>() == 0 ? kExitOk : kExitInternal;
    }

    return kExitUsage;
}
