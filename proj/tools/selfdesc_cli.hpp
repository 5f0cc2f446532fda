#pragma once

// Command-line front end. Kept in a header so tests can drive it in-process
// with string streams; tools/selfdesc.cpp is the thin main().
//
// Exit codes: 0 success, 2 usage or validation error, 3 I/O error.

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "selfdesc/selfdesc.hpp"

namespace selfdesc::cli {

inline constexpr int kOk = 0;
inline constexpr int kUsage = 2;
inline constexpr int kIo = 3;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Standard output or a file, chosen by --out.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) {
        if (path.empty() || path == "-") {
            os_ = &fallback;
            return;
        }
        file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
        if (!*file_) throw IoError("cannot open '" + path + "' for writing");
        os_ = file_.get();
    }

    std::ostream& os() { return *os_; }

    void finish() {
        os_->flush();
        if (!*os_) throw IoError("write failed");
    }

private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream* os_ = nullptr;
};

struct PairArgs {
    std::string t1;
    std::string t2;
};

inline void add_pair(CLI::App* cmd, PairArgs& p) {
    cmd->add_option("--t1", p.t1, "Period of the director T1 (letters 1/2)")->required();
    cmd->add_option("--t2", p.t2, "Period of the director T2 (letters 1/2)")->required();
}

// --- generate ---------------------------------------------------------------

inline void cmd_generate(const DirectorWord& x1, const DirectorWord& x2, std::uint64_t n, const std::string& format,
                         std::ostream& os) {
    Generator g(x1, x2);
    if (format == "raw") {
        std::string buf;
        constexpr std::size_t kChunk = std::size_t{1} << 20;
        buf.reserve(kChunk + 2);
        std::uint64_t written = 0;
        g.run_until_frontier(n, [&](const RunEvent& ev) {
            const char ch = static_cast<char>('0' + ev.letter);
            buf.push_back(ch);
            if (ev.length == 2 && written + buf.size() < n) buf.push_back(ch);
            if (buf.size() >= kChunk) {
                os.write(buf.data(), static_cast<std::streamsize>(buf.size()));
                written += buf.size();
                buf.clear();
            }
        });
        os.write(buf.data(), static_cast<std::streamsize>(buf.size()));
        os << '\n';
    } else {
        os << "k,length,letter,start,source\n";
        g.run_until_frontier(n, [&](const RunEvent& ev) {
            os << ev.k << ',' << int(ev.length) << ',' << int(ev.letter) << ',' << ev.start << ','
               << to_string(ev.source) << '\n';
        });
    }
}

// --- theory -----------------------------------------------------------------

inline std::string theory_json(const DirectorWord& x1, const DirectorWord& x2) {
    const DensityPair d = densities(x1, x2);
    const Spectrum s = perron(d);
    const Frequencies f = frequencies(d);
    std::ostringstream os;
    os << "{\"t1\": \"" << x1.str() << "\", \"t2\": \"" << x2.str() << "\", \"p1\": \"" << d.p1.str()
       << "\", \"q2\": \"" << d.q2.str() << "\", \"delta\": " << fmt_real(s.delta.to_double())
       << ", \"delta_exact\": \"" << s.delta.str() << "\", \"alpha1\": " << fmt_real(s.alpha1)
       << ", \"alpha2\": " << fmt_real(s.alpha2) << ", \"f1\": " << fmt_real(f.f1) << ", \"f2\": " << fmt_real(f.f2)
       << ", \"dfreq\": " << fmt_real(f.dfreq) << ", \"primitive\": " << (s.primitive ? "true" : "false")
       << ", \"perron_vector\": " << (s.r_freq ? "true" : "false") << "}\n";
    return os.str();
}

// --- freq -------------------------------------------------------------------

inline void write_frequency_rows(const FrequencyReport& rep, std::ostream& os) {
    for (const FrequencyRow& r : rep.rows) {
        os << r.n << ',' << r.count1 << ',' << fmt_real(r.emp) << ',' << fmt_real(r.theory) << ','
           << fmt_real(r.err) << ',' << to_string(rep.series) << ',' << (r.ratio ? fmt_real(*r.ratio) : "") << '\n';
    }
}

inline void cmd_freq(const DirectorWord& x1, const DirectorWord& x2, std::uint64_t n,
                     const std::vector<std::uint64_t>& checkpoints, std::ostream& os) {
    const ConvergenceReport rep = convergence_report(x1, x2, n, checkpoints);
    os << "n,count1,emp,theory,err,series,err_ratio\n";
    write_frequency_rows(rep.u, os);
    write_frequency_rows(rep.delta, os);
}

// --- blocks -----------------------------------------------------------------

inline void cmd_blocks(const DirectorWord& x1, const DirectorWord& x2, unsigned levels, bool words, std::ostream& os) {
    const TransitionMatrix m = build_matrices(densities(x1, x2));
    BlockOptions opts;
    opts.keep_words = words;
    os << "n,len,n_a,n_b,n_c,n_d,e_a,e_b,e_c,e_d" << (words ? ",word" : "") << '\n';

    // One level of lookahead: the residual of row n needs v_{n+1}.
    std::optional<BlockLevel> prev;
    auto emit = [&](const BlockLevel& b, const CountVector& next) {
        const Residual e = recursion_residual(b.v, next, m);
        os << b.level << ',' << b.length();
        for (std::uint64_t c : b.v.n) os << ',' << c;
        for (const Rational& x : e) os << ',' << x.str();
        if (words) os << ',' << to_string(b.word);
        os << '\n';
        os.flush();
    };
    for_each_block(x1, x2, opts, [&](BlockLevel&& b) {
        if (prev) emit(*prev, b.v);
        if (b.level == levels) return false;
        prev = std::move(b);
        return true;
    });
}

// --- cut --------------------------------------------------------------------

/// 0, 10, 100, ... below n, then n - 1.
inline std::vector<std::uint64_t> cut_positions(std::uint64_t n) {
    std::vector<std::uint64_t> pos{0};
    for (std::uint64_t p = 10; p < n - 1; p *= 10) pos.push_back(p);
    if (n - 1 > 0) pos.push_back(n - 1);
    return pos;
}

inline void cmd_cut(const DirectorWord& x1, const DirectorWord& x2, std::uint64_t n, std::ostream& os) {
    os << "n,l,prefix_len,g_len,g_count1,g_freq\n";
    for (const CutState& s : cut_at(x1, x2, cut_positions(n)))
        os << s.n << ',' << s.l << ',' << s.prefix_len << ',' << s.g_len << ',' << s.g_count1 << ','
           << fmt_real(s.g_freq()) << '\n';
}

// --- sweep ------------------------------------------------------------------

struct SweepRow {
    std::string x1;
    std::string x2;
    DensityPair d;
    double f1_theory = 0;
    double f1_emp = 0;
    double err = 0;
    double alpha1 = 0;
    double alpha2 = 0;
    bool primitive = false;
};

inline SweepRow sweep_pair(const DirectorWord& x1, const DirectorWord& x2, std::uint64_t n) {
    SweepRow row;
    row.x1 = x1.str();
    row.x2 = x2.str();
    row.d = densities(x1, x2);
    const Spectrum s = perron(row.d);
    row.alpha1 = s.alpha1;
    row.alpha2 = s.alpha2;
    row.primitive = s.primitive;
    const FrequencyReport rep = empirical_frequency(x1, x2, n, {n});
    row.f1_theory = rep.rows.back().theory;
    row.f1_emp = rep.rows.back().emp;
    row.err = rep.rows.back().err;
    return row;
}

/// Every ordered pair of words with period <= max_period, sorted by (x1, x2)
/// as strings. Pairs run on `threads` workers; output order is fixed.
inline std::vector<SweepRow> sweep(std::size_t max_period, std::uint64_t n, unsigned threads) {
    std::vector<DirectorWord> words = all_words(max_period);
    std::sort(words.begin(), words.end(), [](const DirectorWord& a, const DirectorWord& b) { return a.str() < b.str(); });
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = 0; j < words.size(); ++j) pairs.emplace_back(i, j);

    std::vector<SweepRow> rows(pairs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < pairs.size(); i = next++)
            rows[i] = sweep_pair(words[pairs[i].first], words[pairs[i].second], n);
    };
    threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(pairs.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (std::thread& t : pool) t.join();
    return rows;
}

inline void write_sweep(const std::vector<SweepRow>& rows, std::ostream& os) {
    os << "x1,x2,p1,q2,f1_theory,f1_emp,err,alpha1,alpha2,primitive\n";
    for (const SweepRow& r : rows)
        os << r.x1 << ',' << r.x2 << ',' << r.d.p1.str() << ',' << r.d.q2.str() << ',' << fmt_real(r.f1_theory) << ','
           << fmt_real(r.f1_emp) << ',' << fmt_real(r.err) << ',' << fmt_real(r.alpha1) << ',' << fmt_real(r.alpha2)
           << ',' << (r.primitive ? "true" : "false") << '\n';
}

// --- driver -----------------------------------------------------------------

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Self-descriptive sequences over {1,2} directed by two periodic words"};
    app.require_subcommand(1);

    PairArgs pair;
    std::string n_text, out_path, format = "raw", checkpoints_text;
    unsigned levels = 0;
    bool words = false;
    std::size_t max_period = 0;
    unsigned threads = std::max(1U, std::thread::hardware_concurrency());

    auto* gen = app.add_subcommand("generate", "Emit the first n letters of u");
    add_pair(gen, pair);
    gen->add_option("--n", n_text, "Number of letters (>= 2; accepts 1e8)")->required();
    gen->add_option("--format", format, "raw or runs")->check(CLI::IsMember({"raw", "runs"}));
    gen->add_option("--out", out_path, "Output file (default: standard output)");

    auto* theory = app.add_subcommand("theory", "Closed-form and spectral quantities as JSON");
    add_pair(theory, pair);

    auto* freq = app.add_subcommand("freq", "Empirical vs theoretical frequencies of 1 in u and delta");
    add_pair(freq, pair);
    freq->add_option("--n", n_text, "Prefix length (>= 1000)")->required();
    freq->add_option("--checkpoints", checkpoints_text, "Comma-separated increasing lengths (default: powers of 10)");
    freq->add_option("--out", out_path, "Output file");

    auto* blocks = app.add_subcommand("blocks", "Per-level counts and residuals of the block hierarchy");
    add_pair(blocks, pair);
    blocks->add_option("--levels", levels, "Number of levels (1..60)")->required();
    blocks->add_flag("--words", words, "Also print each w_n over {a,b,c,d}");
    blocks->add_option("--out", out_path, "Output file");

    auto* cut = app.add_subcommand("cut", "Block-prefix cutting diagnostic at decade positions");
    add_pair(cut, pair);
    cut->add_option("--n", n_text, "Sequence length (>= 1000)")->required();
    cut->add_option("--out", out_path, "Output file");

    auto* sw = app.add_subcommand("sweep", "Theory vs experiment over all director pairs up to a period");
    sw->add_option("--max-period", max_period, "Largest period P (1..6)")->required();
    sw->add_option("--n", n_text, "Letters per pair (>= 1e5)")->required();
    sw->add_option("--threads", threads, "Worker threads");
    sw->add_option("--out", out_path, "Output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (*theory) {
            const DirectorWord x1 = parse_director(pair.t1), x2 = parse_director(pair.t2);
            out << theory_json(x1, x2);
            return kOk;
        }
        if (*sw) {
            if (max_period < 1 || max_period > 6) throw ValidationError("--max-period must be in 1..6");
            const std::uint64_t n = parse_count(n_text);
            if (n < 100000) throw ValidationError("--n must be at least 1e5 for sweep");
            const auto rows = sweep(max_period, n, threads);
            Sink sink(out_path, out);
            write_sweep(rows, sink.os());
            sink.finish();
            return kOk;
        }

        const DirectorWord x1 = parse_director(pair.t1), x2 = parse_director(pair.t2);
        if (*gen) {
            const std::uint64_t n = parse_count(n_text);
            if (n < 2) throw ValidationError("--n must be at least 2 (the seed length)");
            Sink sink(out_path, out);
            cmd_generate(x1, x2, n, format, sink.os());
            sink.finish();
        } else if (*freq) {
            const std::uint64_t n = parse_count(n_text);
            if (n < 1000) throw ValidationError("--n must be at least 1000");
            const auto cps = checkpoints_text.empty() ? default_checkpoints(n) : parse_count_list(checkpoints_text);
            validate_checkpoints(cps, n);
            Sink sink(out_path, out);
            cmd_freq(x1, x2, n, cps, sink.os());
            sink.finish();
        } else if (*blocks) {
            if (levels < 1 || levels > 60) throw ValidationError("--levels must be in 1..60");
            Sink sink(out_path, out);
            cmd_blocks(x1, x2, levels, words, sink.os());
            sink.finish();
        } else if (*cut) {
            const std::uint64_t n = parse_count(n_text);
            if (n < 1000) throw ValidationError("--n must be at least 1000");
            Sink sink(out_path, out);
            cmd_cut(x1, x2, n, sink.os());
            sink.finish();
        }
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::length_error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kIo;
    }
    return kOk;
}

}  // namespace selfdesc::cli
