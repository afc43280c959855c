#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "skein/json_io.hpp"
#include "skein/skein.hpp"

using namespace skein;
using io::json;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!f) {
        throw UsageError("cannot write " + path);
    }
    f << text;
}

json read_json(const std::string& path) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream f(path);
        if (!f) {
            throw UsageError("cannot read " + path);
        }
        text.assign(std::istreambuf_iterator<char>(f), {});
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw UsageError(std::string("invalid JSON: ") + e.what());
    }
}

void print_report(const VerifyReport& rep) {
    std::cout << "suite " << rep.suite << "\n";
    for (const auto& n : rep.notes) {
        std::cout << "  note: " << n << "\n";
    }
    for (const auto& c : rep.checks) {
        std::cout << "  " << (c.passed() ? "PASS" : "FAIL") << "  " << c.tag << "  [" << c.cases << " cases]\n";
        if (c.counterexample) {
            std::cout << "        counterexample: " << *c.counterexample << "\n";
        }
    }
    std::cout << (rep.passed() ? "PASS" : "FAIL") << "\n";
}

std::string trace(const DescentCertificate& c) {
    std::ostringstream os;
    os << "non-splitting descent, depth " << c.depth << "\n";
    os << "  alpha_{0,0,0} != 0: empty link has value " << c.base.value << " at A = " << c.base.a_value << "\n";
    int i = 1;
    for (const auto& s : c.steps) {
        os << "  [" << i++ << "] " << s.tag << " from " << to_string(s.family) << "(m=" << s.m << ",n=" << s.n
           << ",q=" << s.q << ")";
        if (s.t >= 0) {
            os << " t=" << s.t;
        }
        os << "\n      " << s.constraint.to_string() << "\n";
        if (!s.substituted.empty()) {
            os << "      substitute";
            for (const auto& idx : s.substituted) {
                os << " " << alpha_name(idx) << "=0";
            }
            os << "\n";
        }
        os << "      => " << s.fact << "  (" << to_string(s.justification) << ")\n";
    }
    os << "  breadth chain:";
    for (const auto& l : c.breadth_chain) {
        os << " n=" << l.n << ":" << l.breadth_u << "-" << l.breadth_v << "=" << l.decrement();
    }
    os << "\n";
    for (const auto& t : c.tight_edges) {
        os << "  tight edge: " << t << "\n";
    }
    os << "PASS\n";
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kauffman bracket skein module of (S1xS2)#(S1xS2): relators, identity checks and certificates"};
    app.require_subcommand(1);
    app.allow_extras(false);

    // relator
    auto* rel = app.add_subcommand("relator", "print one relator C(m,n)S_q(a2) or Cbar(q,n)S_m(a1)");
    std::string family = "C";
    int rm = 0, rn = 0, rq = 0;
    std::string rel_out = "json", rel_file;
    rel->add_option("--family", family, "C or Cbar")->check(CLI::IsMember({"C", "Cbar"}));
    rel->add_option("--m", rm)->required()->check(CLI::Range(0, 500));
    rel->add_option("--n", rn)->required()->check(CLI::Range(-500, 500));
    rel->add_option("--q", rq)->required()->check(CLI::Range(0, 500));
    rel->add_option("--out", rel_out, "json or text")->check(CLI::IsMember({"json", "text"}));
    rel->add_option("--output", rel_file, "write to file instead of stdout");

    // verify
    auto* ver = app.add_subcommand("verify", "run an identity sweep");
    std::string suite;
    int vm = 8, vn = 8, vq = 3, vi = 12;
    std::size_t samples = 1000;
    std::uint64_t seed = seed_from_env(20240611);
    ver->add_option("--suite", suite)->required()->check(
        CLI::IsMember({"appendix", "mirror", "antisymmetry", "torsion", "span"}));
    ver->add_option("--max-m", vm)->check(CLI::Range(0, 40));
    ver->add_option("--max-n", vn)->check(CLI::Range(0, 40));
    ver->add_option("--max-q", vq)->check(CLI::Range(0, 40));
    ver->add_option("--max-i", vi, "largest e' index (torsion suite)")->check(CLI::Range(1, 60));
    ver->add_option("--samples", samples, "random samples (span suite)")->check(CLI::Range(1, 1000000));
    ver->add_option("--seed", seed, "seed for randomized suites (default: SKEIN_SEED or fixed)");

    // rank
    auto* rank = app.add_subcommand("rank", "ranks of specialized relator matrices by degree");
    long long a_num = 2, a_den = 1, a_val = 0;
    std::uint64_t prime = 0;
    int degree = 6;
    std::string rank_out = "csv", rank_file;
    auto* num_opt = rank->add_option("--A-num", a_num, "numerator of A (rationals)");
    auto* den_opt = rank->add_option("--A-den", a_den, "denominator of A (rationals)");
    auto* prime_opt = rank->add_option("--prime", prime, "work over GF(p)")->check(CLI::Range(2ULL, (1ULL << 32) - 1));
    auto* val_opt = rank->add_option("--A-val", a_val, "A in GF(p)");
    prime_opt->excludes(num_opt)->excludes(den_opt);
    val_opt->needs(prime_opt);
    rank->add_option("--degree", degree, "degree bound D")->check(CLI::Range(0, 10));
    rank->add_option("--out", rank_out, "csv")->check(CLI::IsMember({"csv"}));
    rank->add_option("--output", rank_file, "write to file instead of stdout");

    // reduce
    auto* red = app.add_subcommand("reduce", "reduce an element (JSON) against a relator set");
    std::string red_in;
    std::string red_set = "box";
    int box_mq = 4, box_n = 4;
    std::string red_file;
    red->add_option("--input", red_in, "element JSON file, - for stdin")->required();
    red->add_option("--relators", red_set, "box or a1-line")->check(CLI::IsMember({"box", "a1-line"}));
    red->add_option("--box-mq", box_mq, "box bound on m and q")->check(CLI::Range(0, 20));
    red->add_option("--box-n", box_n, "box bound on |n|")->check(CLI::Range(0, 20));
    red->add_option("--output", red_file, "write to file instead of stdout");

    // certify-tau
    auto* ct = app.add_subcommand("certify-tau", "torsion certificate for tau_{m,n,q}");
    int tm = 1, tn = 1, tq = 0;
    std::string ct_file;
    ct->add_option("--m", tm)->required()->check(CLI::Range(0, 200));
    ct->add_option("--n", tn)->required()->check(CLI::Range(-200, 200));
    ct->add_option("--q", tq)->required()->check(CLI::Range(0, 200));
    ct->add_option("--output", ct_file, "write to file instead of stdout");

    // certify-eprime
    auto* ce = app.add_subcommand("certify-eprime", "torsion certificate for e'_i");
    int ei = 1;
    std::string ce_file;
    ce->add_option("--i", ei)->required()->check(CLI::Range(1, 200));
    ce->add_option("--output", ce_file, "write to file instead of stdout");

    // nonsplit
    auto* ns = app.add_subcommand("nonsplit", "replay the non-splitting descent");
    int depth = 1;
    bool full_range = false;
    std::string ns_out = "trace", ns_file;
    ns->add_option("--depth", depth)->required()->check(CLI::Range(1, 200));
    ns->add_flag("--full-range", full_range, "derive every alpha_{m,m,k} = 0 up to the induction bound");
    ns->add_option("--out", ns_out, "trace or json")->check(CLI::IsMember({"trace", "json"}));
    ns->add_option("--output", ns_file, "also write the certificate JSON to this file");

    // nonzero
    auto* nz = app.add_subcommand("nonzero", "look for a witness that an element is nonzero modulo relators");
    std::string nz_in;
    nz->add_option("--input", nz_in, "element JSON file, - for stdin")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*rel) {
            Relator r = make_relator(family == "C" ? Family::C : Family::Cbar, rm, rn, rq);
            if (rel_out == "text") {
                emit(r.label() + " = " + r.element.to_string() + "\n", rel_file);
            } else {
                emit(io::to_json(r).dump(2) + "\n", rel_file);
            }
            return kOk;
        }
        if (*ver) {
            VerifyReport rep;
            if (suite == "appendix") {
                rep = verify_appendix(vm, vn);
            } else if (suite == "mirror") {
                rep = verify_mirror(vm, vn);
            } else if (suite == "antisymmetry") {
                rep = verify_antisymmetry(vm, vn, vq);
            } else if (suite == "torsion") {
                rep = verify_torsion(vm, vn, vq, vi);
            } else {
                std::cout << "seed " << seed << "\n";
                rep = verify_span(samples, seed, std::min(vm, 6), std::min(vn, 6));
            }
            print_report(rep);
            return rep.passed() ? kOk : kFailed;
        }
        if (*rank) {
            std::vector<RankRow> rows;
            if (*prime_opt) {
                if (!*val_opt) {
                    throw UsageError("--prime needs --A-val");
                }
                PrimeField F(prime);
                rows = rank_table_prime(F, F.from_signed(a_val), degree);
            } else {
                rows = rank_table_rational(Int(std::to_string(a_num)), Int(std::to_string(a_den)), degree);
            }
            emit(rank_table_csv(rows), rank_file);
            return kOk;
        }
        if (*red) {
            SkeinElement e = io::element_from_json(read_json(red_in));
            RelatorSet rs;
            ReductionCertificate c;
            if (red_set == "a1-line") {
                c = reduce_a1_line(e);
                int top = 0;
                for (const auto& [idx, coeff] : c.input.terms()) {
                    top = std::max(top, idx.i);
                }
                rs = RelatorSet::a1_line(top);
            } else {
                rs = RelatorSet::box(box_mq, box_n);
                c = reduce(e, rs);
            }
            if (!c.verify(rs)) {
                std::cerr << "certificate does not re-expand\n";
                return kFailed;
            }
            emit(io::to_json(c, rs).dump(2) + "\n", red_file);
            return kOk;
        }
        if (*ct) {
            TorsionCertificate c = certify_tau(tm, tn, tq);
            emit(io::to_json(c).dump(2) + "\n", ct_file);
            return c.verify() ? kOk : kFailed;
        }
        if (*ce) {
            TorsionCertificate c = certify_eprime(ei);
            emit(io::to_json(c).dump(2) + "\n", ce_file);
            return c.verify() ? kOk : kFailed;
        }
        if (*ns) {
            DescentCertificate c = verify_descent(depth, full_range);
            if (ns_out == "json") {
                std::cout << io::to_json(c).dump(2) << "\n";
            } else {
                std::cout << trace(c);
            }
            if (!ns_file.empty()) {
                emit(io::to_json(c).dump(2) + "\n", ns_file);
            }
            return kOk;
        }
        if (*nz) {
            SkeinElement e = io::element_from_json(read_json(nz_in));
            auto w = certify_nonzero_mod_relations(e);
            json out = w ? json{{"result", "nonzero"}, {"witness", io::to_json(*w)}} : json{{"result", "inconclusive"}};
            std::cout << out.dump(2) << "\n";
            return kOk;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const CertificateError& e) {
        std::cerr << "certificate failed: " << e.what() << "\n";
        return kFailed;
    } catch (const DescentError& e) {
        std::cerr << "descent failed: " << e.what() << "\n";
        return kFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailed;
    }
    return kUsage;
}
