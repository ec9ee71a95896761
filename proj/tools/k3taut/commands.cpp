#include "k3taut/commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "k3taut/genfunc.hpp"
#include "k3taut/grr.hpp"
#include "k3taut/lattice.hpp"
#include "k3taut/series.hpp"
#include "k3taut/symfunc.hpp"
#include "k3taut/tautring.hpp"

namespace k3taut::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kCheckFailed = 1;

struct Options {
    std::string format = "text";
    int max_n = -1;
    int max_degree = 6;
    std::size_t order = 24;
    std::size_t truncation = kDefaultTruncation;
    std::string kind;
    bool show_even = false;
    long d = 0;
    std::string gram;
    std::string builtin;
};

// One line of a verification report.
struct CheckRow {
    std::string key;  // index or name shown in the first column
    Json id;          // same, as it appears in JSON
    Rational lhs;
    Rational rhs;
    bool ok = false;
};

class Output {
public:
    Output(std::string command, const Options& opts, std::ostream& out)
        : json_mode_(opts.format == "json"), out_(out) {
        doc_["command"] = std::move(command);
        doc_["params"] = Json::object();
        doc_["rows"] = Json::array();
    }

    Json& params() { return doc_["params"]; }
    [[nodiscard]] bool json() const { return json_mode_; }

    void value_row(const std::string& key, Json id, const Rational& value) {
        if (json_mode_) {
            Json row = Json::object();
            row["n"] = std::move(id);
            row["value"] = value.str();
            doc_["rows"].push_back(std::move(row));
        } else {
            out_ << key << " " << value << "\n";
        }
    }

    void push_row(Json row) { doc_["rows"].push_back(std::move(row)); }

    int checks(const std::vector<CheckRow>& rows) {
        bool all = true;
        std::size_t passed = 0;
        for (const auto& r : rows) {
            all = all && r.ok;
            passed += r.ok ? 1 : 0;
            if (json_mode_) {
                Json row = Json::object();
                row["n"] = r.id;
                row["value"] = r.lhs.str();
                row["lhs"] = r.lhs.str();
                row["rhs"] = r.rhs.str();
                row["ok"] = r.ok;
                doc_["rows"].push_back(std::move(row));
            } else {
                out_ << r.key << " " << r.lhs << " " << r.rhs << " " << (r.ok ? "ok" : "FAIL") << "\n";
            }
        }
        if (json_mode_) {
            doc_["ok"] = all;
        } else {
            out_ << (all ? "ok" : "FAILED") << " " << passed << "/" << rows.size() << "\n";
        }
        return all ? 0 : kCheckFailed;
    }

    Json& doc() { return doc_; }

    void finish() {
        if (json_mode_) {
            out_ << doc_.dump(2) << "\n";
        }
    }

private:
    bool json_mode_;
    std::ostream& out_;
    Json doc_ = Json::object();
};

int cmd_pushforwards(const Options& opts, std::ostream& out) {
    const int max_n = opts.max_n < 0 ? 9 : opts.max_n;
    Output o("pushforwards", opts, out);
    o.params()["max_n"] = max_n;
    const PushforwardTable table = solve_pushforwards(max_n);
    for (int n = 0; n <= max_n; ++n) {
        const Rational& a = table.a[static_cast<std::size_t>(n)];
        if (o.json()) {
            Json row = Json::object();
            row["n"] = n;
            row["value"] = a.str();
            row["a"] = a.str();
            o.push_row(std::move(row));
        } else {
            out << n << " " << a << "\n";
        }
    }
    o.finish();
    return 0;
}

int cmd_bernoulli(const Options& opts, std::ostream& out) {
    const int max_n = opts.max_n < 0 ? 12 : opts.max_n;
    Output o("bernoulli", opts, out);
    o.params()["max_n"] = max_n;
    for (int n = 0; n <= max_n; ++n) {
        o.value_row(std::to_string(n), n, bernoulli(static_cast<unsigned>(n)));
    }
    o.finish();
    return 0;
}

int cmd_todd(const Options& opts, std::ostream& out) {
    Output o("todd", opts, out);
    o.params()["max_degree"] = opts.max_degree;
    const SymPoly todd = todd_dual_sympoly(opts.max_degree);
    for (int n = 0; n <= opts.max_degree; ++n) {
        for (int j = 0; 2 * j <= n; ++j) {
            const Rational c = todd.coeff(n - 2 * j, j);
            if (o.json()) {
                Json row = Json::object();
                row["n"] = n;
                row["j"] = j;
                row["value"] = c.str();
                o.push_row(std::move(row));
            } else {
                out << "(" << n << "," << j << ") " << c << "\n";
            }
        }
    }
    o.finish();
    return 0;
}

BigInt json_integer(const Json& x) {
    if (x.is_number_integer()) {
        return BigInt(x.get<long>());
    }
    if (x.is_string()) {
        const Rational r = Rational::parse(x.get<std::string>());
        if (!r.is_integer()) {
            throw std::invalid_argument("Gram matrix entries must be integers");
        }
        return r.numerator();
    }
    throw std::invalid_argument("Gram matrix entries must be integers or integer strings");
}

GramMatrix parse_gram(const std::string& spec) {
    std::string text = spec;
    if (!spec.empty() && spec.front() == '@') {
        std::ifstream in(spec.substr(1));
        if (!in) {
            throw std::invalid_argument("cannot open " + spec.substr(1));
        }
        std::stringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    const Json j = Json::parse(text);
    if (!j.is_array()) {
        throw std::invalid_argument("Gram matrix must be a JSON array of rows");
    }
    std::vector<std::vector<BigInt>> rows;
    for (const auto& row : j) {
        if (!row.is_array()) {
            throw std::invalid_argument("Gram matrix must be a JSON array of rows");
        }
        auto& r = rows.emplace_back();
        for (const auto& x : row) {
            r.push_back(json_integer(x));
        }
    }
    return GramMatrix(std::move(rows));
}

int cmd_lattice(const Options& opts, std::ostream& out) {
    Output o("lattice", opts, out);
    GramMatrix g;
    if (!opts.gram.empty()) {
        g = parse_gram(opts.gram);
        o.params()["gram"] = "input";
    } else if (!opts.builtin.empty()) {
        if (opts.builtin == "U") {
            g = hyperbolic_plane();
        } else if (opts.builtin == "E8neg") {
            g = e8_negative();
        } else {
            g = k3_lattice();
        }
        o.params()["builtin"] = opts.builtin;
    } else {
        const long d = opts.d == 0 ? 1 : opts.d;
        g = polarized_k3_lattice(BigInt(d));
        o.params()["d"] = d;
    }
    const BigInt det = determinant(g);
    const bool even = is_even(g);
    std::string sig_text = "degenerate";
    Json sig_json = nullptr;
    if (det != 0) {
        const Signature s = signature(g);
        sig_text = "(" + std::to_string(s.positive) + "," + std::to_string(s.negative) + ")";
        sig_json = Json::array({s.positive, s.negative});
    }
    if (o.json()) {
        Json& doc = o.doc();
        doc["rank"] = g.rank();
        doc["signature"] = sig_json;
        doc["determinant"] = det.get_str();
        doc["even"] = even;
        Json rows = Json::array();
        for (const auto& row : g.rows()) {
            Json r = Json::array();
            for (const auto& x : row) {
                if (x.fits_slong_p()) {
                    r.push_back(x.get_si());
                } else {
                    r.push_back(x.get_str());
                }
            }
            rows.push_back(std::move(r));
        }
        doc["gram"] = std::move(rows);
    } else {
        out << "rank " << g.rank() << ", signature " << sig_text << ", det " << det.get_str() << ", "
            << (even ? "even" : "odd") << "\n";
    }
    o.finish();
    return 0;
}

int verify_genfunc(const Options& opts, Output& o) {
    const int max_n = opts.max_n < 0 ? 12 : std::max(opts.max_n, 1);
    o.params()["max_n"] = max_n;
    o.params()["order"] = opts.order;
    const GenFunction a(solve_pushforwards(max_n - 1));
    std::vector<CheckRow> rows;
    for (const auto& c : verify_bernoulli_property(a, max_n)) {
        rows.push_back({std::to_string(c.n), c.n, c.lhs, c.rhs, c.ok});
    }
    if (opts.show_even) {
        // Unconstrained; reported for t^0, t^2, ... below the series order.
        const int even_max = static_cast<int>(std::max<std::size_t>(opts.order, 2 * max_n) - 1) / 2;
        const GenFunction wide(solve_pushforwards(std::max(even_max, max_n - 1)));
        const auto even = transform_even_coefficients(wide, even_max);
        Json list = Json::array();
        for (std::size_t k = 0; k < even.size(); ++k) {
            if (o.json()) {
                list.push_back(Json{{"n", 2 * k}, {"value", even[k].str()}});
            } else {
                o.value_row("even " + std::to_string(2 * k), static_cast<int>(2 * k), even[k]);
            }
        }
        if (o.json()) {
            o.doc()["even_coefficients"] = std::move(list);
        }
    }
    return o.checks(rows);
}

int verify_odd(const Options& opts, Output& o) {
    const int max_n = opts.max_n < 0 ? 21 : opts.max_n;
    o.params()["max_n"] = max_n;
    const PushforwardTable table = solve_pushforwards(std::max((max_n - 3) / 2, 0));
    std::vector<CheckRow> rows;
    for (int n = 3; n <= max_n; n += 2) {
        const OddCheck c = odd_consistency(n, table);
        rows.push_back({std::to_string(n), n, c.lhs, c.rhs, c.ok});
    }
    return o.checks(rows);
}

int verify_duality(const Options& opts, Output& o) {
    const std::size_t t = opts.truncation;
    o.params()["truncation"] = t;
    const PushforwardTable table = solve_pushforwards(static_cast<int>((t + 1) / 2));
    const DualityReport r = duality_report(table, t);
    std::vector<CheckRow> rows;
    rows.push_back({"rank_R1_Theta", "rank_R1_Theta", r.rank_tangent, 20, r.rank_tangent == Rational(20)});
    rows.push_back({"rank_R1_Omega1", "rank_R1_Omega1", r.rank_cotangent, 20, r.rank_cotangent == Rational(20)});
    for (std::size_t k = 0; k < t; ++k) {
        const Rational lhs = r.lhs.coeff(k);
        const Rational rhs = r.rhs.coeff(k);
        rows.push_back({std::to_string(k), static_cast<int>(k), lhs, rhs, lhs == rhs});
    }
    return o.checks(rows);
}

int verify_tautring(const Options& opts, Output& o) {
    const std::size_t t = opts.truncation;
    o.params()["truncation"] = t;
    std::vector<CheckRow> rows;
    auto add = [&rows](const std::string& name, const Rational& lhs, const Rational& rhs) {
        rows.push_back({name, name, lhs, rhs, lhs == rhs});
    };

    const NilpotenceReport nil = nilpotence_report(t);
    add("v^T_is_zero", nil.v_T_zero ? 1 : 0, 1);
    add("v^(T-1)_is_nonzero", nil.v_Tminus1_nonzero ? 1 : 0, 1);

    const KClass theta = tangent_moduli(t);
    const Series expected_ch = Series::constant(-1, t) + Rational(21) * exp_series(-1, t) - exp_series(-2, t);
    add("rank_Theta_M", theta.rank(), 19);
    add("ch_Theta_M", theta.ch().series() == expected_ch ? 1 : 0, 1);
    const TautClass c_theta = ch_to_total_chern(theta);
    if (t > 1) {
        add("c1_Theta_M", c_theta.coeff(1), -19);
    }

    Series geometric_v(t);
    Series geometric_v2(t);
    for (std::size_t k = 0; k < t; ++k) {
        geometric_v.set(k, 1);
        if (k % 2 == 0) {
            geometric_v2.set(k, 1);
        }
    }
    const TautClass c_f1 = ch_to_total_chern(hodge_f1(t));
    add("c_F1_is_1/(1-v)", c_f1.series() == geometric_v ? 1 : 0, 1);

    const PushforwardTable table = solve_pushforwards(static_cast<int>((t + 1) / 2));
    const TautClass c_r1 = ch_to_total_chern(r1_cotangent(table, t));
    add("c_R1_Omega1_is_1/(1-v^2)", c_r1.series() == geometric_v2 ? 1 : 0, 1);
    return o.checks(rows);
}

int cmd_verify(const Options& opts, std::ostream& out) {
    Output o("verify " + opts.kind, opts, out);
    o.params()["kind"] = opts.kind;
    int code = 0;
    if (opts.kind == "genfunc") {
        code = verify_genfunc(opts, o);
    } else if (opts.kind == "odd") {
        code = verify_odd(opts, o);
    } else if (opts.kind == "duality") {
        code = verify_duality(opts, o);
    } else {
        code = verify_tautring(opts, o);
    }
    o.finish();
    return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact GRR computations on the moduli of polarized K3 surfaces", "k3taut"};
    app.require_subcommand(1);

    Options opts;
    if (const char* env = std::getenv("K3TAUT_FORMAT"); env != nullptr && *env != '\0') {
        opts.format = env;
    }
    const auto formats = CLI::IsMember({"text", "json"});

    auto* pushforwards = app.add_subcommand("pushforwards", "Print a_n with pi_*(t2^{n+1}) = a_n v^{2n}");
    pushforwards->add_option("--max-n", opts.max_n, "Largest n (default 9)")->check(CLI::NonNegativeNumber);

    auto* verify = app.add_subcommand("verify", "Run a family of exact checks; exit 1 on any failure");
    verify->add_option("kind", opts.kind, "genfunc | odd | duality | tautring")
        ->required()
        ->check(CLI::IsMember({"genfunc", "odd", "duality", "tautring"}));
    verify->add_option("--max-n", opts.max_n, "Bound (genfunc: 12, odd: 21)")->check(CLI::PositiveNumber);
    verify->add_option("--order", opts.order, "Series order for the transformed generating function")
        ->check(CLI::PositiveNumber);
    verify->add_option("--truncation", opts.truncation, "Tautological ring truncation T")
        ->check(CLI::PositiveNumber);
    verify->add_flag("--show-even", opts.show_even, "Also report even coefficients (genfunc)");

    auto* bern = app.add_subcommand("bernoulli", "Print Bernoulli numbers B_0 .. B_n");
    bern->add_option("--max-n", opts.max_n, "Largest n (default 12)")->check(CLI::NonNegativeNumber);

    auto* todd = app.add_subcommand("todd", "Print the Todd-dual coefficients c(n, j)");
    todd->add_option("--max-degree", opts.max_degree, "Largest total degree (default 6)")
        ->check(CLI::NonNegativeNumber);

    auto* lattice = app.add_subcommand("lattice", "Rank, signature, determinant and parity of a lattice");
    auto* d_opt = lattice->add_option("--d", opts.d, "Use L_2d = U^2 + E8(-1)^2 + <-2d> (default d = 1)")
                      ->check(CLI::PositiveNumber);
    auto* gram_opt = lattice->add_option("--gram", opts.gram, "Gram matrix as JSON rows, or @file");
    auto* builtin_opt = lattice->add_option("--builtin", opts.builtin, "U | E8neg | K3")
                            ->check(CLI::IsMember({"U", "E8neg", "K3"}));
    d_opt->excludes(gram_opt)->excludes(builtin_opt);
    gram_opt->excludes(builtin_opt);

    for (auto* sub : {pushforwards, verify, bern, todd, lattice}) {
        sub->add_option("--format", opts.format, "text | json (env K3TAUT_FORMAT)")->check(formats);
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
        if (opts.format != "text" && opts.format != "json") {
            throw CLI::ValidationError("--format", "must be text or json (check K3TAUT_FORMAT)");
        }
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (*pushforwards) {
            return cmd_pushforwards(opts, out);
        }
        if (*verify) {
            return cmd_verify(opts, out);
        }
        if (*bern) {
            return cmd_bernoulli(opts, out);
        }
        if (*todd) {
            return cmd_todd(opts, out);
        }
        return cmd_lattice(opts, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace k3taut::cli
