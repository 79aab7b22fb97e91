// cafcon: command-line front end for the claim-augmented framework tools.
//
// Exit codes:
//   0   success (concurrence: the framework is concurrent)
//   1   input error (unreadable file, parse error, malformed framework)
//   2   internal error (engines disagree, a witness fails verification)
//   3   reduction input has a tautological or empty clause
//   4   verify-reduction: at least one check failed
//   5   fuzz: an invariant was violated
//   6   capacity exceeded (enumeration or oracle cap)
//   10  concurrence: the framework is not concurrent

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cafcon/cafcon.hpp"

namespace {

enum Exit : int {
    kOk = 0,
    kInputError = 1,
    kInternalError = 2,
    kTautology = 3,
    kVerifyFailed = 4,
    kFuzzViolation = 5,
    kCapacity = 6,
    kNotConcurrent = 10,
};

std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw cafcon::Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& data) {
    if (path == "-") {
        std::cout << data;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << data)) throw cafcon::Error("cannot write '" + path + "'");
}

std::size_t enumeration_cap() {
    if (const char* env = std::getenv("CAF_MAX_ARGS")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0' || v == 0) throw cafcon::Error("CAF_MAX_ARGS must be a positive integer");
        return static_cast<std::size_t>(v);
    }
    return cafcon::kDefaultMaxArgs;
}

struct ExtensionsCmd {
    std::string path;
    std::string mode = "inherited";
    bool machine = false;

    int run() const {
        const auto caf = cafcon::parse_caf(read_input(path));
        const auto cap = enumeration_cap();
        const char* tag = "claim-set";
        std::vector<std::string> lines;
        if (mode == "naive") {
            tag = "extension";
            for (const auto& e : cafcon::naive_extensions(caf, cap)) lines.push_back(cafcon::format_extension(caf, e));
        } else {
            const auto fam = mode == "inherited" ? cafcon::inherited_naive(caf, cap) : cafcon::claim_level_naive(caf, cap);
            for (const auto& s : fam) lines.push_back(cafcon::format_claims(caf, s));
        }
        for (const auto& l : lines) std::cout << (machine ? std::string(tag) + " " : "") << l << '\n';
        if (machine) std::cout << "count " << lines.size() << '\n';
        return kOk;
    }
};

struct ConcurrenceCmd {
    std::string path;
    std::string engine = "auto";
    bool witness = false;
    bool machine = false;

    int run() const {
        const auto caf = cafcon::parse_caf(read_input(path));
        const auto cap = enumeration_cap();
        std::string used = engine;
        if (used == "auto") used = caf.n_args() <= cap ? "both" : "sat";

        cafcon::ConcurrenceVerdict verdict;
        if (used == "brute") {
            verdict = cafcon::is_concurrent_brute(caf, cap);
        } else if (used == "sat") {
            verdict = cafcon::is_concurrent_sat(caf);
        } else {
            verdict = cafcon::is_concurrent_brute(caf, cap);
            const auto other = cafcon::is_concurrent_sat(caf);
            if (other.concurrent != verdict.concurrent)
                throw cafcon::InternalError(std::string("engines disagree: brute says ") +
                                            (verdict.concurrent ? "concurrent" : "not-concurrent") + ", sat says " +
                                            (other.concurrent ? "concurrent" : "not-concurrent"));
        }

        const char* word = verdict.concurrent ? "concurrent" : "not-concurrent";
        if (machine) {
            std::cout << "verdict " << word << '\n' << "engine " << used << '\n';
        } else {
            std::cout << word << '\n';
        }
        if (witness && verdict.witness) {
            const auto& w = *verdict.witness;
            const auto e = cafcon::format_extension(caf, w.smaller), ce = cafcon::format_claims(caf, caf.claim_set(w.smaller));
            const auto g = cafcon::format_extension(caf, w.larger), cg = cafcon::format_claims(caf, caf.claim_set(w.larger));
            if (machine) {
                std::cout << "E " << e << "\nclaims-E " << ce << "\nG " << g << "\nclaims-G " << cg << '\n';
            } else {
                std::cout << "E = " << e << "  claims " << ce << '\n' << "G = " << g << "  claims " << cg << '\n';
            }
        }
        return verdict.concurrent ? kOk : kNotConcurrent;
    }
};

struct ReduceCmd {
    std::string cnf_path;
    std::string out_path;

    int run() const {
        const auto f = cafcon::parse_dimacs(read_input(cnf_path));
        const auto art = cafcon::reduce_unsat(f);
        write_output(out_path, cafcon::emit_caf(art.caf));
        (out_path == "-" ? std::cerr : std::cout)
            << art.caf.n_args() << " arguments, " << art.caf.af().attacks().size() << " attacks\n";
        return kOk;
    }
};

struct EncodeCmd {
    std::string path;
    std::string out_path = "-";

    int run() const {
        const auto caf = cafcon::parse_caf(read_input(path));
        write_output(out_path, cafcon::export_encoding_dimacs(cafcon::encode_nonconcurrence(caf), caf));
        return kOk;
    }
};

struct VerifyCmd {
    std::string cnf_path;
    std::size_t max_vars = cafcon::kDefaultOracleMaxVars;

    int run() const {
        const auto f = cafcon::parse_dimacs(read_input(cnf_path));
        const auto art = cafcon::reduce_unsat(f);
        const auto rep = cafcon::verify_reduction(art, f, enumeration_cap(), max_vars);
        for (const auto& c : rep.checks) {
            std::cout << (c.passed ? "PASS " : "FAIL ") << c.name;
            if (!c.detail.empty()) std::cout << ": " << c.detail;
            std::cout << '\n';
        }
        const bool ok = rep.all_passed();
        std::cout << (ok ? "all checks passed" : "verification FAILED") << '\n';
        return ok ? kOk : kVerifyFailed;
    }
};

struct FuzzCmd {
    cafcon::FuzzOptions opt;

    int run() const {
        if (opt.max_args > enumeration_cap())
            throw cafcon::CapacityError("--max-args exceeds the enumeration cap");
        const auto rep = cafcon::run_fuzz(opt);
        for (const auto& f : rep.failures) {
            std::cout << "violation instance " << f.instance << " (seed " << f.instance_seed << "): " << f.invariant
                      << ": " << f.detail << '\n'
                      << "reproduce: cafcon fuzz --seed " << f.instance_seed << " --count 1 --max-args " << opt.max_args
                      << " --max-claims " << opt.max_claims << '\n';
        }
        std::cout << "fuzz: seed " << opt.seed << ", " << rep.instances << " instances, " << rep.concurrent
                  << " concurrent, " << rep.failures.size() << " violations\n";
        return rep.failures.empty() ? kOk : kFuzzViolation;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Concurrence of naive semantics on claim-augmented argumentation frameworks"};
    app.require_subcommand(1);

    ExtensionsCmd ext;
    auto* ext_cmd = app.add_subcommand("extensions", "List naive extensions or claim-based naive claim-sets");
    ext_cmd->add_option("caf", ext.path, "CAF file ('-' for stdin)")->required();
    ext_cmd->add_option("--mode", ext.mode, "naive | inherited | claim-level")
        ->check(CLI::IsMember({"naive", "inherited", "claim-level"}));
    ext_cmd->add_flag("--machine", ext.machine, "Tagged, line-oriented output");

    ConcurrenceCmd con;
    auto* con_cmd = app.add_subcommand("concurrence", "Decide whether inherited and claim-level naive coincide");
    con_cmd->add_option("caf", con.path, "CAF file ('-' for stdin)")->required();
    con_cmd->add_option("--engine", con.engine, "brute | sat | both | auto (both within the cap, sat above)")
        ->check(CLI::IsMember({"brute", "sat", "both", "auto"}));
    con_cmd->add_flag("--witness", con.witness, "Print the witness pair when not concurrent");
    con_cmd->add_flag("--machine", con.machine, "Tagged, line-oriented output");

    ReduceCmd red;
    auto* red_cmd = app.add_subcommand("reduce", "Build the well-formed CAF for a DIMACS formula");
    red_cmd->add_option("cnf", red.cnf_path, "DIMACS file ('-' for stdin)")->required();
    red_cmd->add_option("out", red.out_path, "Output CAF file ('-' for stdout)")->required();

    VerifyCmd ver;
    auto* ver_cmd = app.add_subcommand("verify-reduction", "Check the reduction's correctness facts on a formula");
    ver_cmd->add_option("cnf", ver.cnf_path, "DIMACS file ('-' for stdin)")->required();
    ver_cmd->add_option("--max-vars", ver.max_vars, "Variable cap of the exhaustive SAT oracle")
        ->check(CLI::PositiveNumber);

    EncodeCmd enc;
    auto* enc_cmd = app.add_subcommand("encode", "Export the non-concurrence witness encoding as DIMACS");
    enc_cmd->add_option("caf", enc.path, "CAF file ('-' for stdin)")->required();
    enc_cmd->add_option("out", enc.out_path, "Output DIMACS file (default stdout)");

    FuzzCmd fuzz;
    auto* fuzz_cmd = app.add_subcommand("fuzz", "Cross-check invariants on seeded random CAFs");
    fuzz_cmd->add_option("--seed", fuzz.opt.seed, "Base seed; instance i uses seed + i");
    fuzz_cmd->add_option("--count", fuzz.opt.count, "Number of instances");
    fuzz_cmd->add_option("--max-args", fuzz.opt.max_args, "Maximum arguments per instance")->check(CLI::PositiveNumber);
    fuzz_cmd->add_option("--max-claims", fuzz.opt.max_claims, "Maximum distinct claims per instance")
        ->check(CLI::PositiveNumber);
    fuzz_cmd->add_option("--jobs", fuzz.opt.jobs, "Worker threads")->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*ext_cmd) return ext.run();
        if (*con_cmd) return con.run();
        if (*red_cmd) return red.run();
        if (*ver_cmd) return ver.run();
        if (*enc_cmd) return enc.run();
        if (*fuzz_cmd) return fuzz.run();
    } catch (const cafcon::PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kTautology;
    } catch (const cafcon::CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << '\n';
        return kCapacity;
    } catch (const cafcon::InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInternalError;
    } catch (const cafcon::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}
