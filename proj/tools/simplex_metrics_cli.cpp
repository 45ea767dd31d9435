#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "simplexmetrics/matrix.hpp"
#include "simplexmetrics/simplex.hpp"
#include "simplexmetrics/verify.hpp"

namespace sm = simplexmetrics;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitDimension = 2;
constexpr int kExitIdentity = 3;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t default_seed() {
    if (const char* env = std::getenv("SIMPLEX_METRICS_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw InputError("SIMPLEX_METRICS_SEED is not an unsigned integer");
        }
    }
    return 1;
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
    return j;
}

sm::Rational parse_rational(const json& j, const std::string& what) {
    if (j.is_number_integer()) return sm::Rational(static_cast<long>(j.get<long long>()));
    if (!j.is_string()) throw InputError(what + ": rationals must be \"p/q\" strings");
    try {
        return sm::rational_from_string(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw InputError(what + ": " + e.what());
    }
}

std::vector<std::vector<sm::Rational>> parse_table(const json& j, const std::string& what) {
    if (!j.is_array()) throw InputError(what + ": expected an array of arrays");
    std::vector<std::vector<sm::Rational>> out;
    for (const auto& row : j) {
        if (!row.is_array()) throw InputError(what + ": expected an array of arrays");
        std::vector<sm::Rational> r;
        for (const auto& cell : row) r.push_back(parse_rational(cell, what));
        out.push_back(std::move(r));
    }
    return out;
}

sm::Simplex load_simplex(const std::string& path) {
    json j = load_json(path);
    if (!j.is_object() || !j.contains("points"))
        throw InputError(path + ": expected {\"points\": [[...],...]}");
    return sm::Simplex(parse_table(j["points"], path));
}

sm::SquareDistanceData load_distances(const std::string& path) {
    json j = load_json(path);
    if (!j.is_object() || !j.contains("g"))
        throw InputError(path + ": expected {\"g\": [[...],...]}");
    return sm::SquareDistanceData(parse_table(j["g"], path));
}

// constant metrics only: degree-1 entries are rejected here
sm::RationalMatrix load_metric(const std::string& path) {
    json j = load_json(path);
    if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
        throw InputError(path + ": expected {\"n\": ..., \"entries\": [[...],...]}");
    const auto n = j["n"].get<std::size_t>();
    const json& entries = j["entries"];
    if (!entries.is_array() || entries.size() != n)
        throw InputError(path + ": entries must be an n x n table");
    sm::RationalMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const json& row = entries[i];
        if (!row.is_array() || row.size() != n)
            throw InputError(path + ": entries must be an n x n table");
        for (std::size_t k = 0; k < n; ++k) {
            const json& cell = row[k];
            if (cell.is_object()) {
                if (!cell.contains("const"))
                    throw InputError(path + ": polynomial entry needs a \"const\" field");
                if (cell.contains("linear"))
                    for (const auto& c : cell["linear"])
                        if (parse_rational(c, path) != 0)
                            throw InputError(path + ": volume needs a constant metric");
                g.at(i, k) = parse_rational(cell["const"], path);
            } else {
                g.at(i, k) = parse_rational(cell, path);
            }
        }
    }
    if (!g.is_symmetric()) throw InputError(path + ": metric entries not symmetric");
    return g;
}

std::string rstr(const sm::Rational& q) { return sm::rational_to_string(q); }

long long draw(std::mt19937_64& gen, long long lo, long long hi) {
    return lo + static_cast<long long>(gen() % static_cast<std::uint64_t>(hi - lo + 1));
}

int cmd_volume(const std::string& simplex_file, const std::string& distances_file,
               const std::string& metric_file, const std::string& method) {
    if (simplex_file.empty() == distances_file.empty())
        throw InputError("exactly one of --simplex and --distances is required");

    json out;
    if (!distances_file.empty()) {
        if (!metric_file.empty())
            throw InputError("--metric applies to coordinate input only");
        if (method == "gram")
            throw InputError("--method gram needs coordinates, not a distance table");
        sm::SquareDistanceData d = load_distances(distances_file);
        out["k"] = d.dim_k();
        out["method"] = "cm";
        out["vol2"] = rstr(sm::vol2_cm(d));
        std::cout << out.dump() << "\n";
        return kExitOk;
    }

    sm::Simplex s = load_simplex(simplex_file);
    sm::RationalMatrix g = metric_file.empty()
                               ? sm::RationalMatrix::identity(s.ambient_n())
                               : load_metric(metric_file);
    out["k"] = s.dim_k();
    const bool want_cm = method == "cm" || method == "both";
    const bool want_gram = method == "gram" || method == "both";
    sm::Rational v_cm, v_gram;
    if (want_cm) v_cm = sm::vol2_cm(sm::square_distances_of(s, g));
    if (want_gram) v_gram = sm::vol2_gram(s, g);
    if (method == "both") {
        out["method"] = "both";
        out["vol2_cm"] = rstr(v_cm);
        out["vol2_gram"] = rstr(v_gram);
        const bool agree = v_cm == v_gram;
        out["agree"] = agree;
        out["vol2"] = rstr(v_cm);
        std::cout << out.dump() << "\n";
        return agree ? kExitOk : kExitIdentity;
    }
    out["method"] = method;
    out["vol2"] = rstr(method == "cm" ? v_cm : v_gram);
    std::cout << out.dump() << "\n";
    return kExitOk;
}

int cmd_factors(std::size_t max_k) {
    for (std::size_t k = 0; k <= max_k; ++k)
        std::cout << k << "\t" << rstr(sm::cm_factor(k)) << "\n";
    return kExitOk;
}

int cmd_compare(std::size_t trials, std::size_t max_k, std::size_t max_n, std::uint64_t seed) {
    if (max_k == 0 || max_n < max_k)
        throw InputError("need 1 <= --max-k <= --max-n");
    std::mt19937_64 gen(seed);
    std::size_t passed = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        const auto n = static_cast<std::size_t>(draw(gen, 1, static_cast<long long>(max_n)));
        const auto k = static_cast<std::size_t>(
            draw(gen, 1, static_cast<long long>(std::min(n, max_k))));
        std::vector<std::vector<sm::Rational>> pts(k + 1, std::vector<sm::Rational>(n));
        for (auto& p : pts)
            for (auto& c : p) c = sm::Rational(static_cast<long>(draw(gen, -9, 9)));
        sm::Simplex s(pts);
        sm::ComparisonReport rep = sm::verify_comparison(s);
        const bool vol_ok =
            sm::vol2_cm(sm::square_distances_of(s, sm::RationalMatrix::identity(n))) ==
            sm::vol2_gram(s, sm::RationalMatrix::identity(n));
        if (!rep.identity_holds || !vol_ok) {
            json bad;
            bad["trial"] = t;
            bad["k"] = k;
            bad["n"] = n;
            json jpts = json::array();
            for (const auto& p : pts) {
                json jp = json::array();
                for (const auto& c : p) jp.push_back(rstr(c));
                jpts.push_back(jp);
            }
            bad["points"] = jpts;
            bad["det_cm_scaled"] = rstr(rep.det_cm_scaled);
            bad["det_gram"] = rstr(rep.det_gram);
            std::cout << trials << " trials, " << passed << " passed, failure:\n"
                      << bad.dump() << "\n";
            return kExitIdentity;
        }
        ++passed;
    }
    std::cout << passed << "/" << trials << " comparison trials passed\n";
    return kExitOk;
}

int cmd_verify(std::size_t max_n, std::size_t max_k, std::uint64_t seed,
               const std::string& only) {
    static const std::vector<std::string> known = {
        "check_cm_symmetry",     "check_gram_symmetry",
        "check_prop_ab",         "check_squaring",
        "check_extension_independence", "check_thin_lemma",
        "check_thin_examples",   "check_volume_form_theorem"};
    if (!only.empty() && std::find(known.begin(), known.end(), only) == known.end()) {
        std::cerr << "unknown check: " << only << "\n";
        return kExitInput;
    }
    bool any_fail = false;
    for (const auto& r : sm::run_all(max_n, max_k, seed)) {
        if (!only.empty() && r.check_name != only) continue;
        std::cout << sm::to_json_line(r) << "\n";
        if (r.status == sm::CheckStatus::fail) any_fail = true;
    }
    return any_fail ? kExitIdentity : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact simplex square-volumes and verification suite"};
    app.require_subcommand(1);

    std::string simplex_file, distances_file, metric_file, method = "both", only;
    std::size_t max_k = 3, max_n = 3, trials = 100;
    std::uint64_t seed = 0;
    bool seed_given = false;

    auto* vol = app.add_subcommand("volume", "square volume of one simplex");
    vol->add_option("--simplex", simplex_file, "coordinate JSON file");
    vol->add_option("--distances", distances_file, "square-distance JSON file");
    vol->add_option("--metric", metric_file, "constant metric JSON file");
    vol->add_option("--method", method, "cm|gram|both")
        ->check(CLI::IsMember({"cm", "gram", "both"}));

    auto* fac = app.add_subcommand("factors", "Cayley-Menger factor table");
    fac->add_option("--max-k", max_k, "largest k");

    auto* cmp = app.add_subcommand("compare", "random determinant comparison");
    cmp->add_option("--trials", trials, "number of random simplices");
    cmp->add_option("--max-k", max_k, "largest simplex dimension");
    cmp->add_option("--max-n", max_n, "largest ambient dimension");
    cmp->add_option("--seed", seed, "random seed")->each([&](const std::string&) {
        seed_given = true;
    });

    auto* ver = app.add_subcommand("verify", "run the verification suite");
    ver->add_option("--max-n", max_n, "largest ambient dimension");
    ver->add_option("--max-k", max_k, "largest simplex dimension");
    ver->add_option("--seed", seed, "random seed")->each([&](const std::string&) {
        seed_given = true;
    });
    ver->add_option("--only", only, "run a single check by name");

    CLI11_PARSE(app, argc, argv);

    try {
        if (!seed_given) seed = default_seed();
        if (vol->parsed()) return cmd_volume(simplex_file, distances_file, metric_file, method);
        if (fac->parsed()) return cmd_factors(max_k);
        if (cmp->parsed()) return cmd_compare(trials, max_k, max_n, seed);
        return cmd_verify(max_n, max_k, seed, only);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const sm::DimensionMismatch& e) {
        std::cerr << "dimension error: " << e.what() << "\n";
        return kExitDimension;
    } catch (const sm::NonSquareError& e) {
        std::cerr << "dimension error: " << e.what() << "\n";
        return kExitDimension;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIdentity;
    }
}
