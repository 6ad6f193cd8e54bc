// Command-line front end: basis construction, matrix export, invariant
// verification and the S_3 analyses. Output is deterministic for a given
// command line.
//
// Exit codes: 0 success, 1 verification failure (or a rejected monomial
// set), 2 invalid arguments, 3 resource guard.

#include "hecke/center_basis.hpp"
#include "hecke/json_io.hpp"
#include "hecke/matrix_store.hpp"
#include "hecke/s3.hpp"
#include "hecke/tower.hpp"
#include "hecke/verification.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace hecke;
using json::Json;

namespace {

constexpr int kMaxBasisRank = 6;
constexpr int kMaxTowerK = 5;
constexpr int kMaxS3Size = 40;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Options {
    std::string format = "json";
    std::string output;
    std::string cache_dir;
    unsigned threads = 1;
    int n = 0;
    int k = 0;
    std::string which = "M";
    int max_size = 7;
    int bound = 20;
    std::string set;
};

MatrixStore make_store(const Options& o) {
    std::optional<std::filesystem::path> dir;
    if (!o.cache_dir.empty()) dir = o.cache_dir;
    return MatrixStore(MatrixRoute::kAuto, dir, o.threads);
}

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed)
        if (o.format == f) return;
    throw UsageError("format '" + o.format + "' is not available for this command");
}

std::string label(const char* prefix, const Composition& c) { return prefix + c.to_string(); }

std::string expansion_text(const Expansion& e, const char* symbol) {
    std::string out;
    for (const auto& [mu, c] : e) {
        if (!out.empty()) out += " + ";
        if (!c.is_one()) out += "(" + c.to_string() + ")*";
        out += label(symbol, mu);
    }
    return out.empty() ? "0" : out;
}

Json expansion_json(const Expansion& e) {
    Json arr = Json::array();
    for (const auto& [mu, c] : e) arr.push_back(Json{{"mu", json::to_json(mu)}, {"coeff", json::to_json(c)}});
    return arr;
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

std::string matrix_csv(const LabeledMatrix& m) {
    std::ostringstream os;
    os << "row";
    for (const auto& c : m.col_labels()) os << "," << csv_quote(c.to_string());
    os << "\n";
    for (std::size_t i = 0; i < m.nrows(); ++i) {
        os << csv_quote(m.row_labels()[i].to_string());
        for (std::size_t j = 0; j < m.ncols(); ++j) os << "," << csv_quote(m.at(i, j).to_string());
        os << "\n";
    }
    return os.str();
}

std::string cmd_basis(const Options& o) {
    if (o.n < 1) throw UsageError("--n must be positive");
    if (o.n > kMaxBasisRank) throw ResourceLimit("basis is limited to n <= " + std::to_string(kMaxBasisRank));
    require_format(o, {"json", "text"});
    auto store = make_store(o);
    auto b = basis(o.n, store);
    if (o.format == "text") {
        std::string out;
        for (const auto& e : b) out += label("M", e.label) + " = " + expansion_text(e.monomial_coeffs, "m") + "\n";
        return out;
    }
    Json arr = Json::array();
    for (const auto& e : b)
        arr.push_back(Json{{"label", json::to_json(e.label)},
                           {"monomials", expansion_json(e.monomial_coeffs)},
                           {"gamma", expansion_json(e.gamma_coeffs)}});
    return Json{{"n", o.n}, {"basis", arr}}.dump(2) + "\n";
}

LabeledMatrix named_matrix(const Options& o) {
    const std::string& w = o.which;
    const int k = o.k;
    if (w == "Mdirect") {
        if (k > kMaxDirectK) throw ResourceLimit("Mdirect is limited to k <= " + std::to_string(kMaxDirectK));
        return m_matrix_direct(k, 0, o.threads);
    }
    if (w == "A") return a_matrix(k);
    if (w == "Z") return z_matrix(k);
    if (w == "Xi") return xi_matrix(k);
    if (w == "Upsilon") return upsilon_matrix(k);
    if (w == "K") return k_matrix(k);
    if (w == "T") return t_matrix(k, kValidatedHat);
    auto store = make_store(o);
    if (w == "M") return store.m(k);
    if (w == "N") return store.n(k);
    throw UsageError("unknown matrix '" + w + "'");
}

std::string cmd_matrix(const Options& o) {
    const bool block = o.which == "A" || o.which == "Z" || o.which == "Xi" || o.which == "Upsilon" ||
                       o.which == "K" || o.which == "T";
    if (o.k < (block ? 1 : 0)) throw UsageError("--k is out of range for " + o.which);
    if (o.k > kMaxTowerK) throw ResourceLimit("matrix is limited to k <= " + std::to_string(kMaxTowerK));
    require_format(o, {"json", "text", "csv"});
    LabeledMatrix m = named_matrix(o);
    if (o.format == "text") return m.to_string();
    if (o.format == "csv") return matrix_csv(m);
    return json::to_json(m).dump(2) + "\n";
}

std::string cmd_verify(const Options& o, bool& failed) {
    if (o.n < 1) throw UsageError("--n must be positive");
    if (o.n > kMaxBasisRank) throw ResourceLimit("verify is limited to n <= " + std::to_string(kMaxBasisRank));
    require_format(o, {"json", "text"});
    auto store = make_store(o);
    auto results = verify_rank(o.n, store);
    for (const auto& r : results) failed |= !r.passed;
    if (o.format == "text") {
        std::string out;
        for (const auto& r : results)
            out += std::string(r.passed ? "PASS " : "FAIL ") + r.name + (r.detail.empty() ? "" : " (" + r.detail + ")") + "\n";
        return out;
    }
    Json arr = Json::array();
    for (const auto& r : results) arr.push_back(Json{{"property", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    return Json{{"n", o.n}, {"all_passed", !failed}, {"properties", arr}}.dump(2) + "\n";
}

std::string cmd_s3_table(const Options& o) {
    if (o.max_size < 0) throw UsageError("--max-size must be non-negative");
    if (o.max_size > kMaxS3Size) throw ResourceLimit("s3-table is limited to --max-size <= " + std::to_string(kMaxS3Size));
    auto cols = s3::table(o.max_size);
    static const char* kRows[3] = {"Gamma(1,1,1)", "Gamma(2,1)", "Gamma(3)"};
    if (o.format == "csv" || o.format == "text") {
        std::ostringstream os;
        const char sep = o.format == "csv" ? ',' : '\t';
        os << "class";
        for (const auto& [mu, c] : cols) os << sep << (o.format == "csv" ? csv_quote(label("m", mu)) : label("m", mu));
        os << "\n";
        for (int r = 0; r < 3; ++r) {
            os << kRows[r];
            for (const auto& [mu, c] : cols) os << sep << c[r].str();
            os << "\n";
        }
        return os.str();
    }
    require_format(o, {"json"});
    Json arr = Json::array();
    for (const auto& [mu, c] : cols)
        arr.push_back(Json{{"mu", json::to_json(mu)},
                           {"coeffs", Json::array({json::to_json(c.gamma111), json::to_json(c.gamma21), json::to_json(c.gamma3)})}});
    return Json{{"rows", Json::array({"Gamma(1,1,1)", "Gamma(2,1)", "Gamma(3)"})}, {"columns", arr}}.dump(2) + "\n";
}

Json sets_json(const std::vector<s3::MonomialSet>& sets) {
    Json arr = Json::array();
    for (const auto& s : sets) {
        Json one = Json::array();
        for (const auto& mu : s) one.push_back(json::to_json(mu));
        arr.push_back(one);
    }
    return arr;
}

std::string set_text(const s3::MonomialSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + label("m", s[i]);
    return out + "}";
}

std::string cmd_s3_enumerate(const Options& o) {
    if (o.bound < 8) throw UsageError("--bound must be at least 8");
    if (o.bound > kMaxS3Size) throw ResourceLimit("s3-enumerate is limited to --bound <= " + std::to_string(kMaxS3Size));
    require_format(o, {"json", "text"});
    auto bases = s3::enumerate_zs3_bases(o.bound);
    auto g21 = s3::gamma21_unit_monomials(o.bound);
    auto g3 = s3::gamma3_unit_monomials(o.bound);
    auto h3 = s3::h3_candidate_determinants();
    std::vector<s3::MonomialSet> survivors;
    for (const auto& [set, det] : h3)
        if (det.is_unit()) survivors.push_back(set);

    if (o.format == "text") {
        std::ostringstream os;
        os << "Z S_3 monomial bases with |mu| <= " << o.bound << " (bounded search): " << bases.size() << " found\n";
        for (const auto& s : bases) os << "  " << set_text(s) << "\n";
        os << "monomials with Gamma(2,1) coefficient +-1: " << set_text(g21) << "\n";
        os << "monomials with Gamma(3) coefficient +-1: " << set_text(g3) << "\n";
        os << "H_3 determinants of the Z S_3 bases:\n";
        for (const auto& [set, det] : h3) os << "  " << set_text(set) << ": " << det.to_string() << (det.is_unit() ? " (unit)" : "") << "\n";
        os << "integral bases of Z(H_3): " << survivors.size() << " found\n";
        for (const auto& s : survivors) os << "  " << set_text(s) << "\n";
        return os.str();
    }
    Json dets = Json::array();
    for (const auto& [set, det] : h3)
        dets.push_back(Json{{"set", sets_json({set})[0]}, {"det", json::to_json(det)}, {"unit", det.is_unit()}});
    return Json{{"bound", o.bound},
                {"zs3_bases", sets_json(bases)},
                {"gamma21_unit_monomials", sets_json({g21})[0]},
                {"gamma3_unit_monomials", sets_json({g3})[0]},
                {"h3_determinants", dets},
                {"h3_bases", sets_json(survivors)}}
               .dump(2) +
           "\n";
}

std::vector<Composition> parse_set(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const std::exception&) {
        throw UsageError("--set must be a JSON array of partitions, e.g. [[],[1],[1,1]]");
    }
    if (!j.is_array()) throw UsageError("--set must be a JSON array");
    std::vector<Composition> out;
    for (const auto& e : j) {
        Composition c = json::composition_from_json(e);
        if (!c.is_partition()) throw UsageError(c.to_string() + " is not a partition");
        out.push_back(std::move(c));
    }
    return out;
}

std::string cmd_check_set(const Options& o, bool& failed) {
    if (o.n < 1) throw UsageError("--n must be positive");
    if (o.n > kMaxRank) throw ResourceLimit("check-set is limited to n <= " + std::to_string(kMaxRank));
    require_format(o, {"json", "text"});
    auto set = parse_set(o.set);
    if (set.size() != enumerate_partitions(o.n).size())
        throw UsageError("--set needs " + std::to_string(enumerate_partitions(o.n).size()) + " monomials for n = " + std::to_string(o.n));
    auto t = monomial_transition(set, o.n);
    Poly det = determinant(t);
    failed = !det.is_unit();
    if (o.format == "text")
        return t.to_string() + "det = " + det.to_string() + "\n" + (failed ? "not an integral basis" : "integral basis") + "\n";
    return Json{{"n", o.n}, {"set", sets_json({set})[0]}, {"transition", json::to_json(t)}, {"det", json::to_json(det)},
                {"integral_basis", !failed}}
               .dump(2) +
           "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Integral bases of the centre of the type A Iwahori-Hecke algebra"};
    app.require_subcommand(1);
    Options o;
    auto common = [&](CLI::App* sub, std::initializer_list<const char*> formats) {
        std::vector<std::string> f(formats.begin(), formats.end());
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(f));
        sub->add_option("--output,-o", o.output, "Write to this file instead of stdout");
        sub->add_option("--cache-dir", o.cache_dir, "Directory for cached M/N matrices");
        sub->add_option("--threads", o.threads, "Worker threads")->check(CLI::Range(1u, 256u));
    };

    auto* basis_cmd = app.add_subcommand("basis", "Integral basis of Z(H_n) in monomials and class elements");
    basis_cmd->add_option("--n", o.n, "Rank")->required();
    common(basis_cmd, {"json", "text"});

    auto* matrix_cmd = app.add_subcommand("matrix", "Export a tower matrix");
    matrix_cmd->add_option("--k", o.k, "Size parameter")->required();
    matrix_cmd->add_option("--which", o.which, "A, Z, Xi, Upsilon, K, T, M, N or Mdirect")
        ->check(CLI::IsMember({"A", "Z", "Xi", "Upsilon", "K", "T", "M", "N", "Mdirect"}));
    common(matrix_cmd, {"json", "text", "csv"});

    auto* verify_cmd = app.add_subcommand("verify", "Run the invariant suite for rank n");
    verify_cmd->add_option("--n", o.n, "Rank")->required();
    common(verify_cmd, {"json", "text"});

    auto* table_cmd = app.add_subcommand("s3-table", "Coefficients of class sums in monomials over Z S_3");
    table_cmd->add_option("--max-size", o.max_size, "Largest |mu|");
    common(table_cmd, {"json", "text", "csv"});

    auto* enum_cmd = app.add_subcommand("s3-enumerate", "Classify monomial bases of Z(Z S_3) and Z(H_3)");
    enum_cmd->add_option("--bound", o.bound, "Largest |mu| searched");
    common(enum_cmd, {"json", "text"});

    auto* check_cmd = app.add_subcommand("check-set", "Test whether monomials form an integral basis of Z(H_n)");
    check_cmd->add_option("--n", o.n, "Rank")->required();
    check_cmd->add_option("--set", o.set, "JSON array of partitions, e.g. [[],[1],[1,1]]")->required();
    common(check_cmd, {"json", "text"});

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    bool failed = false;
    std::string out;
    try {
        if (*basis_cmd) out = cmd_basis(o);
        else if (*matrix_cmd) out = cmd_matrix(o);
        else if (*verify_cmd) out = cmd_verify(o, failed);
        else if (*table_cmd) out = cmd_s3_table(o);
        else if (*enum_cmd) out = cmd_s3_enumerate(o);
        else if (*check_cmd) out = cmd_check_set(o, failed);
    } catch (const ResourceLimit& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    if (o.output.empty()) {
        std::cout << out;
    } else {
        std::ofstream f(o.output);
        if (!f) {
            std::cerr << "error: cannot write " << o.output << "\n";
            return 2;
        }
        f << out;
    }
    return failed ? 1 : 0;
}
