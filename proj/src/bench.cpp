#include "framedual/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

#include "framedual/errors.hpp"
#include "framedual/fixtures.hpp"
#include "framedual/generators.hpp"
#include "framedual/random.hpp"
#include "framedual/recovery.hpp"

namespace framedual {

const char* const kCsvHeader =
    "test,N,r,k,seed,t1,t2,t3,t4_z1,t5_z1,t4_z2,t5_z2,"
    "e1,e2,e3,e4_z1,e5_z1,e4_z2,e5_z2,stmtA,stmtAp,stmtB,stmtC,stmtD";

namespace {

template <typename F>
double time_seconds(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

std::string format_double(const char* fmt, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, v);
    return buf;
}

std::string time_cell(const std::optional<double>& v) {
    return v ? format_double("%.6f", *v) : "NA";
}

std::string err_cell(const std::optional<double>& v) {
    return v ? format_double("%.4e", *v) : "NA";
}

std::string flag_cell(const std::optional<StatementReport>& s, bool StatementReport::*member) {
    if (!s) return "NA";
    return ((*s).*member) ? "1" : "0";
}

struct MethodOutcome {
    std::optional<double> t;
    std::optional<double> e;
};

MethodOutcome run_matrix_method(const Frame& x, const Frame& z, const ErasureSet& e, double tol,
                                const Frame& x_red) {
    MethodOutcome out;
    try {
        std::optional<Frame> v;
        out.t = time_seconds([&] { v = reduced_dual_matrix(x, z, e, tol); });
        out.e = duality_error(x_red, *v);
    } catch (const SingularAxz&) {
        out.t.reset();
        out.e.reset();
    }
    return out;
}

MethodOutcome run_iterative_method(const Frame& x, const Frame& z, const ErasureSet& e, double tol,
                                   const Frame& x_red) {
    MethodOutcome out;
    std::optional<IterationTrace> trace;
    const double elapsed = time_seconds([&] { trace = reduced_dual_iterative(x, z, e, tol); });
    if (trace->completed_all()) {
        out.t = elapsed;
        out.e = duality_error(x_red, iterative_dual_frame(*trace));
    }
    return out;
}

/// Times all five constructions on one instance. z2 is drawn from rng.
BenchRecord profile_instance(std::string label, const Frame& x, const Frame& y, const Frame& z1,
                             const ErasureSet& e, double tol, Rng& rng, std::uint64_t seed) {
    BenchRecord rec;
    rec.test = std::move(label);
    rec.count = x.count();
    rec.dim = x.dim();
    rec.erasures = e.k();
    rec.seed = seed;

    const Frame x_red = reduced_frame(x, e);

    const MethodOutcome o1 = run_iterative_method(x, y, e, tol, x_red);
    rec.t1 = o1.t;
    rec.e1 = o1.e;
    const MethodOutcome o2 = run_matrix_method(x, y, e, tol, x_red);
    rec.t2 = o2.t;
    rec.e2 = o2.e;
    try {
        std::optional<Frame> v;
        rec.t3 = time_seconds([&] { v = canonical_dual_unchecked(x_red); });
        rec.e3 = duality_error(x_red, *v);
    } catch (const NotAFrame&) {
        rec.t3.reset();
    }

    const Frame z2 = random_dual(rng, x, y);
    const MethodOutcome o4a = run_matrix_method(x, z1, e, tol, x_red);
    rec.t4_z1 = o4a.t;
    rec.e4_z1 = o4a.e;
    const MethodOutcome o5a = run_iterative_method(x, z1, e, tol, x_red);
    rec.t5_z1 = o5a.t;
    rec.e5_z1 = o5a.e;
    const MethodOutcome o4b = run_matrix_method(x, z2, e, tol, x_red);
    rec.t4_z2 = o4b.t;
    rec.e4_z2 = o4b.e;
    const MethodOutcome o5b = run_iterative_method(x, z2, e, tol, x_red);
    rec.t5_z2 = o5b.t;
    rec.e5_z2 = o5b.e;

    rec.statements = check_statements(x, z1, e, tol);
    return rec;
}

} // namespace

void validate_config(const BenchConfig& cfg) {
    if (cfg.dim < 1) throw ConfigError("dim must be at least 1");
    if (cfg.count < 2) throw ConfigError("count must be at least 2");
    if (cfg.erasures < 1) throw ConfigError("erasures must be at least 1");
    if (cfg.erasures >= cfg.count)
        throw ConfigError("erasures must leave at least one vector (k < N)");
    if (cfg.count - cfg.erasures < cfg.dim)
        throw ConfigError("N - k must be at least dim, otherwise the survivors cannot span");
    if (cfg.trials < 1) throw ConfigError("trials must be at least 1");
    if (!(cfg.tol > 0.0)) throw ConfigError("tol must be positive");
}

std::vector<BenchRecord> run_random_bench(const BenchConfig& cfg) {
    std::optional<Frame> fixed;
    BenchConfig eff = cfg;
    if (cfg.frame_file) {
        fixed = load_frame(*cfg.frame_file);
        eff.dim = fixed->dim();
        eff.count = fixed->count();
    }
    validate_config(eff);

    std::vector<int> leading(eff.erasures);
    std::iota(leading.begin(), leading.end(), 1);
    const ErasureSet e(leading, eff.count);

    if (fixed && !mrc_check(*fixed, e, eff.tol))
        throw MrcUnattainable("supplied frame: erasing the first k vectors leaves a family that does not span");

    std::vector<BenchRecord> records;
    records.reserve(eff.trials);
    for (int trial = 0; trial < eff.trials; ++trial) {
        const std::uint64_t trial_seed = mix_seed(eff.seed, static_cast<std::uint64_t>(trial));
        Rng rng(trial_seed);

        std::optional<Frame> x;
        if (fixed) {
            x = *fixed;
        } else {
            for (int attempt = 0; attempt < 10; ++attempt) {
                x = random_frame(rng, eff.dim, eff.count);
                if (mrc_check(*x, e, eff.tol)) break;
                x.reset();
            }
            if (!x)
                throw MrcUnattainable(
                    "could not draw a frame whose survivors span within 10 attempts");
        }
        const Frame y = canonical_dual_unchecked(*x);
        const Frame z1 = random_dual(rng, *x, y);
        records.push_back(
            profile_instance(std::to_string(trial + 1), *x, y, z1, e, eff.tol, rng, trial_seed));
    }
    return records;
}

void emit_csv(const std::vector<BenchRecord>& records, std::ostream& out) {
    out << kCsvHeader << '\n';
    for (const auto& r : records) {
        out << r.test << ',' << r.count << ',' << r.dim << ',' << r.erasures << ',' << r.seed << ','
            << time_cell(r.t1) << ',' << time_cell(r.t2) << ',' << time_cell(r.t3) << ','
            << time_cell(r.t4_z1) << ',' << time_cell(r.t5_z1) << ',' << time_cell(r.t4_z2) << ','
            << time_cell(r.t5_z2) << ',' << err_cell(r.e1) << ',' << err_cell(r.e2) << ','
            << err_cell(r.e3) << ',' << err_cell(r.e4_z1) << ',' << err_cell(r.e5_z1) << ','
            << err_cell(r.e4_z2) << ',' << err_cell(r.e5_z2) << ','
            << flag_cell(r.statements, &StatementReport::stmt_A) << ','
            << flag_cell(r.statements, &StatementReport::stmt_A_prime) << ','
            << flag_cell(r.statements, &StatementReport::stmt_B) << ','
            << flag_cell(r.statements, &StatementReport::stmt_C) << ','
            << flag_cell(r.statements, &StatementReport::stmt_D) << '\n';
    }
    if (!out) throw Error("csv: write failure");
}

void emit_csv(const std::vector<BenchRecord>& records, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw Error("csv: cannot open " + path + " for writing");
    emit_csv(records, f);
}

namespace {

std::string yn(bool b) { return b ? "yes" : "no"; }

std::string set_label(const ErasureSet& e) {
    std::ostringstream os;
    os << "E={";
    const auto idx = e.indices();
    for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i];
    os << '}';
    return os.str();
}

std::string statement_line(const ErasureSet& e, const StatementReport& s) {
    std::ostringstream os;
    os << set_label(e) << ": A=" << yn(s.stmt_A) << "  A'=" << yn(s.stmt_A_prime)
       << "  B=" << yn(s.stmt_B) << "  C=" << yn(s.stmt_C) << "  D=" << yn(s.stmt_D)
       << "  rcond=" << format_double("%.2e", s.axz_condition);
    if (s.iteration_stop) os << "  (iteration stops at j=" << *s.iteration_stop << ')';
    return os.str();
}

std::string family_preview(const Frame& f, int max_cols = 6, int max_rows = 5) {
    std::ostringstream os;
    const int cols = std::min(f.count(), max_cols);
    const int rows = std::min(f.dim(), max_rows);
    for (int j = 0; j < cols; ++j) {
        if (j) os << ' ';
        os << '(';
        for (int i = 0; i < rows; ++i) {
            if (i) os << ',';
            os << format_double("%.3g", f.synthesis()(i, j));
        }
        if (rows < f.dim()) os << ",...";
        os << ')';
    }
    if (cols < f.count()) os << " ...";
    return os.str();
}

void expect(DemoReport& rep, bool cond, const std::string& what) {
    rep.lines.push_back(std::string(cond ? "  [ok]   " : "  [FAIL] ") + what);
    if (!cond) rep.ok = false;
}

// max over columns of ||got_j - want_j||_inf
double max_entry_deviation(const Frame& got, const Matrix& want) {
    if (got.dim() != want.rows() || got.count() != want.cols())
        throw DimensionMismatch("demo: family has unexpected shape");
    double dev = 0.0;
    for (int j = 0; j < want.cols(); ++j)
        for (int i = 0; i < want.rows(); ++i)
            dev = std::max(dev, std::abs(got.synthesis()(i, j) - want(i, j)));
    return dev;
}

// (0, e1, e2, ...) over `cols` columns in dimension r
Matrix shifted_basis_family(int r, int cols, int leading_zeros) {
    Matrix m(r, cols);
    for (int j = leading_zeros; j < cols; ++j) m(j - leading_zeros, j) = 1.0;
    return m;
}

DemoReport demo_example31(int r) {
    DemoReport rep;
    rep.name = "example31";
    const double tol = kDefaultTol;
    const Frame x = fixtures::triple_repeat_frame(r);
    const Frame z = fixtures::half_zero_dual(r);
    const Frame y = canonical_dual_unchecked(x);
    rep.lines.push_back("frame (e1, e1, e1, e2, ..., e_r) with dual (e1/2, 0, e1/2, e2, ...), r=" +
                        std::to_string(r) + ", N=" + std::to_string(x.count()));

    const ErasureSet e13({1, 3}, x.count());
    const StatementReport s13 = check_statements(x, z, e13, tol);
    rep.lines.push_back(statement_line(e13, s13));
    expect(rep, s13.stmt_A && !s13.stmt_A_prime,
           "survivors of the frame span but survivors of the dual do not (A holds, A' fails)");

    const ErasureSet e1({1}, x.count());
    const Frame v1 = reduced_dual_matrix(x, z, e1, tol);
    rep.lines.push_back("E={1} reduced dual: " + family_preview(v1));
    expect(rep, max_entry_deviation(v1, shifted_basis_family(r, x.count() - 1, 1)) <= 1e-12,
           "E={1}: k-by-k construction returns the family (0, e1, e2, ...)");

    const ErasureSet e12({1, 2}, x.count());
    const Frame v12 = reduced_dual_matrix(x, z, e12, tol);
    rep.lines.push_back("E={1,2} reduced dual: " + family_preview(v12));
    expect(rep, max_entry_deviation(v12, shifted_basis_family(r, x.count() - 2, 0)) <= 1e-12,
           "E={1,2}: k-by-k construction returns the basis family (e1, e2, ...)");

    Rng rng(mix_seed(31, 0));
    rep.records.push_back(profile_instance("example31_E13", x, y, z, e13, tol, rng, 31));
    rep.records.push_back(profile_instance("example31_E1", x, y, z, e1, tol, rng, 31));
    rep.records.push_back(profile_instance("example31_E12", x, y, z, e12, tol, rng, 31));
    return rep;
}

DemoReport demo_example34(int r) {
    DemoReport rep;
    rep.name = "example34";
    const double tol = kDefaultTol;
    const Frame x = fixtures::triple_repeat_frame(r);
    const Frame z = fixtures::signed_half_dual(r);
    const Frame y = canonical_dual_unchecked(x);
    rep.lines.push_back("frame (e1, e1, e1, e2, ..., e_r) with dual (e1, -e1/2, e1/2, e2, ...), r=" +
                        std::to_string(r) + ", N=" + std::to_string(x.count()));

    const ErasureSet e1({1}, x.count());
    const StatementReport s1 = check_statements(x, z, e1, tol);
    rep.lines.push_back(statement_line(e1, s1));
    expect(rep, s1.stmt_A_prime && !s1.stmt_B && !s1.stmt_C,
           "E={1}: both families keep spanning yet the 1-by-1 system is singular (A' holds, B and C fail)");
    const AxzMatrix axz1 = build_axz(x, z, e1);
    expect(rep, axz1.data.rows() == 1 && axz1.data(0, 0) == 0.0,
           "E={1}: coefficient matrix is exactly [0]");
    bool operator_rejected = false;
    try {
        reduced_dual_operator(x, z, e1, tol);
    } catch (const SingularOperator&) {
        operator_rejected = true;
    }
    expect(rep, operator_rejected, "E={1}: operator construction reports a singular operator");

    const ErasureSet e12({1, 2}, x.count());
    const StatementReport s12 = check_statements(x, z, e12, tol);
    rep.lines.push_back(statement_line(e12, s12));
    expect(rep, s12.stmt_B && s12.stmt_C && !s12.stmt_D && s12.iteration_stop == 1,
           "E={1,2}: the k-by-k system is solvable but the iteration stops at step 1 (B and C hold, D fails)");

    const Frame v_mat = reduced_dual_matrix(x, z, e12, tol);
    const Frame v_op = reduced_dual_operator(x, z, e12, tol);
    const Matrix want = shifted_basis_family(r, x.count() - 2, 0);
    rep.lines.push_back("E={1,2} reduced dual: " + family_preview(v_mat));
    expect(rep, max_entry_deviation(v_mat, want) <= 1e-12 && max_entry_deviation(v_op, want) <= 1e-12,
           "E={1,2}: matrix and operator constructions both return (e1, e2, ...)");

    Rng rng(mix_seed(34, 0));
    rep.records.push_back(profile_instance("example34_E1", x, y, z, e1, tol, rng, 34));
    rep.records.push_back(profile_instance("example34_E12", x, y, z, e12, tol, rng, 34));
    return rep;
}

DemoReport demo_test9(int r) {
    DemoReport rep;
    rep.name = "test9";
    const double tol = kDefaultTol;
    const Frame x = fixtures::block_repeat_frame(r);
    const Frame z1 = fixtures::early_stop_dual(r);
    const Frame y = canonical_dual_unchecked(x);
    rep.lines.push_back("frame (e1 x 11, e2, ..., e_r) with crafted dual (e1/4, e1/4, e1/2, 0, ..., e2, ...), r=" +
                        std::to_string(r) + ", N=" + std::to_string(x.count()) + ", k=4");

    std::vector<int> first_four = {1, 2, 3, 4};
    const ErasureSet e(first_four, x.count());
    expect(rep, mrc_check(x, e, tol), "erasing the first four copies leaves a spanning family");

    const StatementReport s = check_statements(x, z1, e, tol);
    rep.lines.push_back(statement_line(e, s));
    expect(rep, s.stmt_A && !s.stmt_A_prime && !s.stmt_B && !s.stmt_C && !s.stmt_D,
           "crafted dual: survivors of the dual no longer span and the k-by-k system is singular");

    const IterationTrace trace = reduced_dual_iterative(x, z1, e, tol);
    expect(rep, trace.iteration_stop == 3, "crafted dual: rank-one iteration stops at j=3");
    bool matrix_rejected = false;
    try {
        reduced_dual_matrix(x, z1, e, tol);
    } catch (const SingularAxz&) {
        matrix_rejected = true;
    }
    expect(rep, matrix_rejected, "crafted dual: k-by-k construction not applicable (singular system)");

    Rng rng(mix_seed(9, 0));
    BenchRecord rec = profile_instance("test9", x, y, z1, e, tol, rng, 9);
    expect(rep, !rec.t4_z1 && !rec.t5_z1, "crafted dual: both non-canonical cells are marked NA");
    expect(rep, rec.e1 && *rec.e1 <= 1e-10 && rec.e2 && *rec.e2 <= 1e-10 && rec.e3 && *rec.e3 <= 1e-10,
           "canonical constructions complete with duality error <= 1e-10");
    expect(rep, rec.e4_z2 && *rec.e4_z2 <= 1e-10 && rec.e5_z2 && *rec.e5_z2 <= 1e-10,
           "random dual: matrix and iterative constructions complete with duality error <= 1e-10");
    rep.lines.push_back(fastest_method_line(rec));
    rep.records.push_back(std::move(rec));
    return rep;
}

} // namespace

DemoReport run_fixed_demo(const std::string& name, std::optional<int> dim) {
    if (name == "example31") return demo_example31(dim.value_or(10));
    if (name == "example34") return demo_example34(dim.value_or(10));
    if (name == "test9") return demo_test9(dim.value_or(300));
    throw ConfigError("unknown demo `" + name + "` (expected example31, example34, or test9)");
}

namespace {

// max over columns of ||a_j - b_j|| / (1 + ||b_j||)
double max_column_deviation(const Frame& a, const Frame& b) {
    if (a.dim() != b.dim() || a.count() != b.count())
        throw DimensionMismatch("column deviation: shapes differ");
    double worst = 0.0;
    for (int j = 0; j < a.count(); ++j) {
        double diff2 = 0.0, ref2 = 0.0;
        for (int i = 0; i < a.dim(); ++i) {
            const double d = a.synthesis()(i, j) - b.synthesis()(i, j);
            diff2 += d * d;
            ref2 += b.synthesis()(i, j) * b.synthesis()(i, j);
        }
        worst = std::max(worst, std::sqrt(diff2) / (1.0 + std::sqrt(ref2)));
    }
    return worst;
}

} // namespace

VerifyReport run_verify(int trials, std::uint64_t seed, double tol) {
    VerifyReport rep;
    auto check = [&](bool cond, const std::string& what) {
        rep.lines.push_back(std::string(cond ? "[ok]   " : "[FAIL] ") + what);
        if (!cond) rep.ok = false;
    };

    {
        const Frame x = fixtures::triple_repeat_frame(10);
        const Frame z = fixtures::half_zero_dual(10);
        const StatementReport s = check_statements(x, z, ErasureSet({1, 3}, x.count()), tol);
        check(s.stmt_A && !s.stmt_A_prime && !s.stmt_B && !s.stmt_C && !s.stmt_D,
              "counterexample E={1,3}: A holds without A'");
        const Frame v1 = reduced_dual_matrix(x, z, ErasureSet({1}, x.count()), tol);
        check(max_entry_deviation(v1, shifted_basis_family(10, x.count() - 1, 1)) <= 1e-12,
              "counterexample E={1}: reduced dual is (0, e1, e2, ...)");
        const Frame v12 = reduced_dual_matrix(x, z, ErasureSet({1, 2}, x.count()), tol);
        check(max_entry_deviation(v12, shifted_basis_family(10, x.count() - 2, 0)) <= 1e-12,
              "counterexample E={1,2}: reduced dual is (e1, e2, ...)");
    }
    {
        const Frame x = fixtures::triple_repeat_frame(10);
        const Frame z = fixtures::signed_half_dual(10);
        const StatementReport s1 = check_statements(x, z, ErasureSet({1}, x.count()), tol);
        check(s1.stmt_A_prime && !s1.stmt_B && !s1.stmt_C,
              "counterexample E={1}: A' holds without B and C");
        const StatementReport s12 = check_statements(x, z, ErasureSet({1, 2}, x.count()), tol);
        check(s12.stmt_B && s12.stmt_C && !s12.stmt_D && s12.iteration_stop == 1,
              "counterexample E={1,2}: B and C hold without D");
    }

    Rng rng(seed);
    int chain_violations = 0;
    for (int i = 0; i < trials; ++i) {
        const RandomTriple t = random_statement_triple(rng);
        const StatementReport s = check_statements(t.x, t.z, t.e, tol);
        const bool ok = (!s.stmt_D || s.stmt_C) && (s.stmt_B == s.stmt_C) &&
                        (!s.stmt_C || s.stmt_A_prime) && (!s.stmt_A_prime || s.stmt_A);
        if (!ok) ++chain_violations;
    }
    check(chain_violations == 0,
          std::to_string(trials) + " random triples: implication chain D => C = B => A' => A holds");

    int canonical_mismatches = 0;
    for (int i = 0; i < trials; ++i) {
        const int r = rng.uniform_int(5, 24);
        const int n = rng.uniform_int(r + 4, 3 * r);
        const int k = rng.uniform_int(1, std::min(8, n - r - 3));
        const ErasureSet e = random_erasure_set(rng, n, k);
        const Frame x = (i % 3 == 2) ? random_frame_deficient(rng, r, n, e) : random_frame(rng, r, n);
        const Frame y = canonical_dual_unchecked(x);
        const StatementReport s = check_statements(x, y, e, tol);
        if (!(s.stmt_A == s.stmt_B && s.stmt_B == s.stmt_C && s.stmt_C == s.stmt_D))
            ++canonical_mismatches;
    }
    check(canonical_mismatches == 0,
          std::to_string(trials) + " canonical-dual instances: statements A, B, C, D agree");

    int method_disagreements = 0;
    for (int i = 0; i < trials; ++i) {
        const int r = rng.uniform_int(5, 20);
        const int n = rng.uniform_int(r + 4, 3 * r);
        const int k = rng.uniform_int(1, std::min(6, n - r - 3));
        const ErasureSet e = random_erasure_set(rng, n, k);
        const Frame x = random_frame(rng, r, n);
        const Frame y = canonical_dual_unchecked(x);
        const Frame z = (i % 2 == 0) ? y : random_dual(rng, x, y);
        const StatementReport s = check_statements(x, z, e, tol);
        if (!s.stmt_B || !s.stmt_D) continue;
        const Frame vm = reduced_dual_matrix(x, z, e, tol);
        const Frame vo = reduced_dual_operator(x, z, e, tol);
        const Frame vi = iterative_dual_frame(reduced_dual_iterative(x, z, e, tol));
        double dev = std::max(max_column_deviation(vo, vm), max_column_deviation(vi, vm));
        if (i % 2 == 0) dev = std::max(dev, max_column_deviation(canonical_dual_unchecked(reduced_frame(x, e)), vm));
        if (dev > 1e-8) ++method_disagreements;
    }
    check(method_disagreements == 0,
          std::to_string(trials) + " solvable instances: the three constructions agree column-wise");

    return rep;
}

std::string fastest_method_line(const BenchRecord& rec) {
    struct Cell {
        const char* name;
        const std::optional<double>* t;
    };
    const Cell cells[] = {
        {"t1 (iteration, canonical)", &rec.t1},   {"t2 (k-by-k, canonical)", &rec.t2},
        {"t3 (direct reduced dual)", &rec.t3},    {"t4_z1 (k-by-k, dual z1)", &rec.t4_z1},
        {"t5_z1 (iteration, dual z1)", &rec.t5_z1}, {"t4_z2 (k-by-k, dual z2)", &rec.t4_z2},
        {"t5_z2 (iteration, dual z2)", &rec.t5_z2},
    };
    const Cell* best = nullptr;
    for (const Cell& c : cells)
        if (c.t->has_value() && (!best || **c.t < **best->t)) best = &c;
    if (!best) return "trial " + rec.test + ": no construction completed";
    return "trial " + rec.test + ": fastest " + best->name + " = " +
           format_double("%.6f", **best->t) + " s";
}

std::vector<std::string> median_summary(const std::vector<BenchRecord>& records) {
    struct Column {
        const char* name;
        std::optional<double> BenchRecord::*member;
    };
    const Column columns[] = {
        {"t1", &BenchRecord::t1},       {"t2", &BenchRecord::t2},       {"t3", &BenchRecord::t3},
        {"t4_z1", &BenchRecord::t4_z1}, {"t5_z1", &BenchRecord::t5_z1}, {"t4_z2", &BenchRecord::t4_z2},
        {"t5_z2", &BenchRecord::t5_z2},
    };
    std::vector<std::string> lines;
    for (const Column& col : columns) {
        std::vector<double> values;
        for (const auto& r : records)
            if ((r.*col.member).has_value()) values.push_back(*(r.*col.member));
        if (values.empty()) continue;
        std::sort(values.begin(), values.end());
        const std::size_t m = values.size() / 2;
        const double median =
            (values.size() % 2) ? values[m] : 0.5 * (values[m - 1] + values[m]);
        lines.push_back(std::string(col.name) + " median " + format_double("%.6f", median) +
                        " s over " + std::to_string(values.size()) + " run(s)");
    }
    return lines;
}

} // namespace framedual
