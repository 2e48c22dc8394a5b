#include "cayley/cli.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "cayley/coeffs.hpp"
#include "cayley/fingroup.hpp"
#include "cayley/mealy.hpp"
#include "cayley/normalform.hpp"
#include "cayley/relcheck.hpp"
#include "cayley/words.hpp"

namespace cayley::cli {

namespace {

struct GroupSource {
    std::string builtin;
    std::string file;

    GroupPtr load() const {
        if (!builtin.empty() && !file.empty())
            throw Error("give exactly one of --group and --file");
        if (!builtin.empty()) return FiniteGroup::builtin(builtin);
        if (!file.empty()) return FiniteGroup::load_file(file);
        throw Error("a group is required: --group <name> or --file <path>");
    }
};

void add_group_options(CLI::App* cmd, GroupSource& src) {
    cmd->add_option("--group", src.builtin, "builtin group name");
    cmd->add_option("--file", src.file, "group file path");
}

std::vector<int> parse_input_word(const std::string& text, const FiniteGroup& g) {
    std::vector<int> out;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        const int e = g.index_of(tok);
        if (e < 0) throw UnknownLabel(tok);
        out.push_back(e);
    }
    return out;
}

std::string join_labels(const std::vector<int>& letters, const FiniteGroup& g) {
    std::string out;
    for (int a : letters) {
        if (!out.empty()) out += ' ';
        out += g.label(a);
    }
    return out;
}

std::string render_coeff_table(const CoeffMatrix& m) {
    std::size_t width = 1;
    for (int i = 1; i <= m.n_max(); ++i)
        for (int j = 1; j <= m.n_max(); ++j)
            if (m.at(i, j) != 0) width = std::max(width, m.at(i, j).str().size());
    std::ostringstream os;
    for (int i = 1; i <= m.n_max(); ++i) {
        std::string line;
        for (int j = 1; j <= m.n_max(); ++j) {
            std::string cell = m.at(i, j) == 0 ? "" : m.at(i, j).str();
            cell.insert(0, width - cell.size(), ' ');
            if (j > 1) line += ' ';
            line += cell;
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << '\n';
    }
    return os.str();
}

std::string render_coeff_csv(const CoeffMatrix& m) {
    std::ostringstream os;
    for (int i = 1; i <= m.n_max(); ++i) {
        for (int j = 1; j <= m.n_max(); ++j) os << (j > 1 ? "," : "") << m.at(i, j).str();
        os << '\n';
    }
    return os.str();
}

void print_timing(std::ostream& out, double seconds) {
    out << "time: " << std::fixed << std::setprecision(3) << seconds << "s\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cayley machines of finite groups: coefficient tables, normal forms,"
                 " relation checks"};
    app.require_subcommand(1);
    int rc = 0;

    // group
    GroupSource g_src;
    auto* g_cmd = app.add_subcommand("group", "load a group and print its profile");
    add_group_options(g_cmd, g_src);
    bool g_info = false;
    g_cmd->add_flag("--info", g_info, "print the group profile (default)");
    g_cmd->callback([&] {
        const GroupPtr g = g_src.load();
        out << "name: " << g->name() << "\n";
        out << "order: " << g->order() << "\n";
        out << "elements: " << join_labels([&] {
            std::vector<int> all(static_cast<std::size_t>(g->order()));
            for (int i = 0; i < g->order(); ++i) all[static_cast<std::size_t>(i)] = i;
            return all;
        }(), *g) << "\n";
        if (g->is_class_at_most_two()) {
            out << "class <= 2: yes\n";
        } else {
            const auto& w = g->class_witness();
            out << "class <= 2: no (witness g=" << g->label(w->g) << " h=" << g->label(w->h)
                << " z=" << g->label(w->z) << ")\n";
        }
        std::string center;
        for (int z : g->center()) {
            if (!center.empty()) center += ", ";
            center += g->label(z);
        }
        out << "center: {" << center << "}\n";
        out << "exponent: " << g->exponent() << "\n";
    });

    // coeffs
    int c_nmax = 11;
    std::string c_format = "table";
    bool c_check = false;
    auto* c_cmd = app.add_subcommand("coeffs", "coefficient matrix a_ij");
    c_cmd->add_option("--n-max", c_nmax, "matrix size")->check(CLI::Range(1, 1000));
    c_cmd->add_option("--format", c_format, "output format")
        ->check(CLI::IsMember({"table", "csv"}));
    c_cmd->add_flag("--check", c_check, "verify the row and summation identities");
    c_cmd->callback([&] {
        const CoeffMatrix m = CoeffMatrix::build_recursive(c_nmax);
        if (c_check) {
            const auto rows = check_row_identities(m);
            int row_pass = 0;
            for (const RowCheck& rcheck : rows) {
                if (rcheck.pass) ++row_pass;
                else out << "row " << rcheck.row << ": FAIL (" << rcheck.first_failure << ")\n";
            }
            int sum_total = 0, sum_pass = 0;
            for (int n = 1; n + 1 <= c_nmax; ++n)
                for (int mm = 1; mm <= n; ++mm) {
                    ++sum_total;
                    if (check_sum_identity(m, mm, n)) ++sum_pass;
                    else out << "summation m=" << mm << " n=" << n << ": FAIL\n";
                }
            out << "row identities: " << row_pass << "/" << rows.size() << " pass\n";
            out << "summation identities: " << sum_pass << "/" << sum_total << " pass\n";
            if (row_pass != static_cast<int>(rows.size()) || sum_pass != sum_total) rc = 1;
            return;
        }
        out << (c_format == "csv" ? render_coeff_csv(m) : render_coeff_table(m));
    });

    // machine
    GroupSource m_src;
    std::string m_word;
    bool m_invert = false, m_minimize = false;
    auto* m_cmd = app.add_subcommand("machine", "dump a Cayley or word machine");
    add_group_options(m_cmd, m_src);
    m_cmd->add_option("word", m_word, "generator word (omit for the Cayley machine)");
    m_cmd->add_flag("--invert", m_invert, "dump the inverse Cayley machine");
    m_cmd->add_flag("--minimize", m_minimize, "minimize the word machine first");
    std::size_t m_budget = kDefaultStateBudget;
    m_cmd->add_option("--state-budget", m_budget, "product state cap");
    m_cmd->callback([&] {
        const GroupPtr g = m_src.load();
        if (!m_word.empty() || m_cmd->count("word")) {
            if (m_invert) throw Error("--invert applies to the bare Cayley machine only");
            PointedMachine p = to_machine(parse(m_word, *g), *g, m_budget);
            if (m_minimize) p = minimize(p);
            out << dump(p, g->labels());
            return;
        }
        if (m_minimize) throw Error("--minimize requires a word argument");
        MachinePtr c = cayley_machine(*g);
        if (m_invert) c = invert(*c);
        out << dump(*c, g->labels());
    });

    // act
    GroupSource a_src;
    std::string a_word, a_input;
    auto* a_cmd = app.add_subcommand("act", "apply a word to an input word");
    add_group_options(a_cmd, a_src);
    a_cmd->add_option("word", a_word, "generator word")->required();
    a_cmd->add_option("input", a_input, "input letters, whitespace-separated labels")
        ->required();
    a_cmd->callback([&] {
        const GroupPtr g = a_src.load();
        const std::vector<int> in = parse_input_word(a_input, *g);
        out << join_labels(act_word(parse(a_word, *g), *g, in), *g) << "\n";
    });

    // eq
    GroupSource e_src;
    std::string e_u, e_v, e_method = "machine";
    std::size_t e_budget = kDefaultStateBudget;
    bool e_timing = false;
    auto* e_cmd = app.add_subcommand("eq", "decide equality of two words");
    add_group_options(e_cmd, e_src);
    e_cmd->add_option("u", e_u, "first word")->required();
    e_cmd->add_option("v", e_v, "second word")->required();
    e_cmd->add_option("--method", e_method, "equality engine")
        ->check(CLI::IsMember({"machine", "action"}));
    e_cmd->add_option("--state-budget", e_budget, "product state cap");
    e_cmd->add_flag("--timing", e_timing, "print wall time");
    e_cmd->callback([&] {
        const GroupPtr g = e_src.load();
        const auto start = std::chrono::steady_clock::now();
        const GenWord u = parse(e_u, *g);
        const GenWord v = parse(e_v, *g);
        VerifyOptions opts;
        opts.method = e_method == "machine" ? Method::Machine : Method::Action;
        opts.state_budget = e_budget;
        const bool same = word_equal(u, v, *g, opts);
        out << (same ? "EQUAL" : "NOT EQUAL") << "\n";
        if (e_timing)
            print_timing(out, std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                            start).count());
        if (!same) rc = 1;
    });

    // nf
    GroupSource n_src;
    std::string n_word;
    auto* n_cmd = app.add_subcommand("nf", "normalize a word");
    add_group_options(n_cmd, n_src);
    n_cmd->add_option("word", n_word, "generator word");
    n_cmd->callback([&] {
        const GroupPtr g = n_src.load();
        out << display(normalize(parse(n_word, *g), *g), *g) << "\n";
    });

    // verify
    GroupSource v_src;
    long long v_nmax = 3, v_n = -1;
    std::string v_method = "machine", v_format = "table";
    bool v_wreath = false, v_depth = false, v_timing = false;
    std::size_t v_budget = kDefaultStateBudget;
    auto* v_cmd = app.add_subcommand("verify", "check relations, wreath coordinates, depth");
    add_group_options(v_cmd, v_src);
    v_cmd->add_option("--n-max", v_nmax, "largest conjugation level");
    v_cmd->add_option("--n", v_n, "check a single level only");
    v_cmd->add_option("--method", v_method, "equality engine")
        ->check(CLI::IsMember({"machine", "action"}));
    v_cmd->add_option("--format", v_format, "output format")
        ->check(CLI::IsMember({"table", "csv"}));
    v_cmd->add_flag("--wreath", v_wreath, "check wreath coordinates instead of relations");
    v_cmd->add_flag("--depth", v_depth, "check depths instead of relations");
    v_cmd->add_flag("--timing", v_timing, "print wall time");
    v_cmd->add_option("--state-budget", v_budget, "product state cap");
    v_cmd->callback([&] {
        const GroupPtr g = v_src.load();
        VerifyOptions opts;
        opts.method = v_method == "machine" ? Method::Machine : Method::Action;
        opts.state_budget = v_budget;
        std::vector<VerificationReport> reports;
        const long long rel_lo = v_n >= 0 ? v_n : 1;
        const long long oth_lo = v_n >= 0 ? v_n : 0;
        const long long hi = v_n >= 0 ? v_n : v_nmax;
        if (!v_wreath && !v_depth) reports.push_back(verify_all(*g, hi, opts, rel_lo));
        if (v_wreath) reports.push_back(verify_wreath_all(*g, hi, opts, oth_lo));
        if (v_depth) reports.push_back(verify_depth_all(*g, hi, opts, oth_lo));
        for (const VerificationReport& r : reports) {
            if (v_format == "csv") {
                out << render_lines(r, *g);
            } else {
                for (const CheckRecord& c : r.checks)
                    if (c.verdict == Verdict::Fail)
                        out << "FAIL " << c.id << " n=" << c.n << " g="
                            << (c.g >= 0 ? g->label(c.g) : "-") << " h="
                            << (c.h >= 0 ? g->label(c.h) : "-") << ": " << c.note << "\n";
                out << render_summary(r) << "\n";
            }
            if (!r.all_pass()) rc = 1;
            if (v_timing) print_timing(out, r.wall_seconds);
        }
    });

    // xval
    GroupSource x_src;
    int x_count = 1000, x_maxlen = 12;
    uint64_t x_seed = 42;
    bool x_timing = false;
    std::size_t x_budget = kDefaultStateBudget;
    auto* x_cmd = app.add_subcommand("xval", "cross-validate normal forms against machines");
    add_group_options(x_cmd, x_src);
    x_cmd->add_option("--count", x_count, "number of word pairs")->check(CLI::PositiveNumber);
    x_cmd->add_option("--max-len", x_maxlen, "maximum word length")->check(CLI::PositiveNumber);
    x_cmd->add_option("--seed", x_seed, "random seed");
    x_cmd->add_option("--state-budget", x_budget, "product state cap");
    x_cmd->add_flag("--timing", x_timing, "print wall time");
    x_cmd->callback([&] {
        const GroupPtr g = x_src.load();
        VerifyOptions opts;
        opts.state_budget = x_budget;
        const VerificationReport r = cross_validate(*g, x_count, x_maxlen, x_seed, opts);
        int agree = 0, round_ok = 0;
        for (const CheckRecord& c : r.checks) {
            if (c.verdict == Verdict::Fail) out << "FAIL " << c.id << " " << c.n << ": " << c.note << "\n";
            else if (c.id == "xval") ++agree;
            else ++round_ok;
        }
        out << agree << "/" << x_count << " agreement\n";
        out << "roundtrip: " << round_ok << "/" << x_count << "\n";
        if (!r.all_pass()) rc = 1;
        if (x_timing) print_timing(out, r.wall_seconds);
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}

}  // namespace cayley::cli
