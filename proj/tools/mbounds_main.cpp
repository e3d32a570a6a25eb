#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mbounds/errors.hpp"
#include "mbounds/io.hpp"
#include "mbounds/report.hpp"

namespace {

using mbounds::report::Json;

std::vector<int> parse_j_list(const std::string& text) {
    if (text.empty() || text == "all") return {};
    std::vector<int> out;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            size_t pos = 0;
            out.push_back(std::stoi(tok, &pos));
            if (pos != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw mbounds::InvalidInput("bad j list entry: '" + tok + "'");
        }
    }
    return out;
}

std::pair<double, double> parse_range(const std::string& text, const char* what) {
    size_t dots = text.find("..", 1); // skip a leading '-'; "..5" is malformed anyway
    if (dots == std::string::npos)
        throw mbounds::InvalidInput(std::string(what) + " must look like LO..HI");
    try {
        size_t pos = 0;
        std::string lo_text = text.substr(0, dots), hi_text = text.substr(dots + 2);
        double lo = std::stod(lo_text, &pos);
        if (pos != lo_text.size()) throw std::invalid_argument(lo_text);
        double hi = std::stod(hi_text, &pos);
        if (pos != hi_text.size()) throw std::invalid_argument(hi_text);
        return {lo, hi};
    } catch (const std::exception&) {
        throw mbounds::InvalidInput(std::string(what) + " must look like LO..HI");
    }
}

mbounds::oracle::Family parse_family(const std::string& name) {
    if (name == "distinct-int") return mbounds::oracle::Family::distinct_integers;
    if (name == "two-block") return mbounds::oracle::Family::two_block;
    if (name == "real") return mbounds::oracle::Family::real_uniform;
    throw mbounds::InvalidInput("unknown family: '" + name +
                                "' (expected distinct-int, two-block, or real)");
}

std::string slurp_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw mbounds::ParseError("cannot open file: " + path);
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

void print_report(const Json& report, bool table) {
    if (table)
        std::cout << mbounds::report::render_table(report);
    else
        std::cout << report.dump(2) << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"bounds on sample moments, eigenvalues, and polynomial roots"};
    app.require_subcommand(1);

    bool table = false;

    std::string sample_file, sample_j = "all";
    mbounds::report::SampleOptions sopt;
    auto* sample = app.add_subcommand("sample", "bound a sample's moments and order statistics");
    sample->add_option("file", sample_file, "sample file (numbers; '#' comments)")->required();
    sample->add_option("--r", sopt.r, "moment order parameter (bounds the 2r-th moment)")
        ->capture_default_str();
    sample->add_option("--j", sample_j, "order statistics to bound: comma list or 'all'")
        ->capture_default_str();
    sample->add_flag("--integer-claims", sopt.integer_claims,
                     "note when the distinct-integer witness fails");
    sample->add_flag("--table", table, "aligned text output instead of JSON");

    std::string matrix_file, matrix_j = "all";
    mbounds::report::MatrixOptions mopt;
    auto* matrix = app.add_subcommand("matrix", "bound eigenvalues from matrix traces");
    matrix->add_option("file", matrix_file, "square CSV matrix file")->required();
    matrix->add_option("--j", matrix_j, "eigenvalue indices: comma list or 'all'")
        ->capture_default_str();
    matrix->add_option("--r", mopt.r, "moment order parameter")->capture_default_str();
    matrix
        ->add_option("--phi", mopt.phi,
                     "re-centering functional: trace-mean, entry:R,C, diag-avg:I,J,..., const:V")
        ->capture_default_str();
    matrix->add_option("--q", mopt.q, "odd power for the re-centered interval (0 = off)")
        ->capture_default_str();
    matrix->add_flag("--integer-spectrum", mopt.integer_spectrum,
                     "assert n distinct integer eigenvalues");
    matrix->add_flag("--verify-spectrum", mopt.verify_spectrum,
                     "add oracle eigenvalues and satisfied/tight flags");
    matrix->add_flag("--table", table, "aligned text output instead of JSON");

    std::vector<double> poly_tokens;
    std::string poly_json, poly_j = "all";
    mbounds::report::PolyOptions popt;
    auto* poly = app.add_subcommand("poly", "bound the roots of a monic polynomial");
    poly->add_option("coeffs", poly_tokens,
                     "monic coefficients, highest first (leading 1 optional)");
    poly->add_option("--json", poly_json, "read the polynomial from a JSON file instead");
    poly->add_option("--j", poly_j, "root indices: comma list or 'all'")->capture_default_str();
    poly->add_option("--r", popt.max_r, "largest moment order parameter (1 or 2)")
        ->capture_default_str();
    poly->add_flag("--integer-roots", popt.integer_roots,
                   "claim n distinct integer roots for refined span bounds");
    poly->add_flag("--verify-roots", popt.verify_roots,
                   "add oracle roots and satisfied/tight flags");
    poly->add_flag("--table", table, "aligned text output instead of JSON");

    std::string vfamily = "distinct-int", vn_range = "3..5", vvalue_range = "-6..6";
    std::string vbounds = "all";
    bool vexhaustive = false;
    long long vcount = 1000;
    std::uint64_t vseed = 1;
    auto* verify = app.add_subcommand("verify", "run the verification harness");
    verify->add_option("--family", vfamily, "input family: distinct-int, two-block, real")
        ->capture_default_str();
    verify->add_option("--n-range", vn_range, "sample sizes LO..HI")->capture_default_str();
    verify->add_option("--value-range", vvalue_range, "value range LO..HI")
        ->capture_default_str();
    verify->add_flag("--exhaustive", vexhaustive,
                     "enumerate every distinct-integer sample in range");
    verify->add_option("--count", vcount, "number of random inputs")->capture_default_str();
    verify->add_option("--seed", vseed, "generator seed")->capture_default_str();
    verify
        ->add_option("--bounds", vbounds, "bound selectors (comma list): all, classic, thm1, "
                                          "thm1-upper, all-real, all-integer")
        ->capture_default_str();
    verify->add_flag("--table", table, "aligned text output instead of JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (sample->parsed()) {
            sopt.j_list = parse_j_list(sample_j);
            auto values = mbounds::io::read_sample_file(sample_file);
            print_report(mbounds::report::sample_report(values, sopt), table);
            return 0;
        }
        if (matrix->parsed()) {
            mopt.j_list = parse_j_list(matrix_j);
            auto a = mbounds::io::read_matrix_file(matrix_file);
            print_report(mbounds::report::matrix_report(a, mopt), table);
            return 0;
        }
        if (poly->parsed()) {
            popt.j_list = parse_j_list(poly_j);
            std::vector<double> trailing;
            if (!poly_json.empty()) {
                if (!poly_tokens.empty())
                    throw mbounds::InvalidInput("give coefficients either inline or via --json");
                auto parsed = mbounds::io::parse_poly_json(slurp_file(poly_json));
                auto monic = parsed.monic_coefficients();
                trailing.assign(monic.begin() + 1, monic.end());
            } else {
                trailing = mbounds::io::parse_poly_coefficients(poly_tokens);
            }
            print_report(mbounds::report::poly_report(trailing, popt), table);
            return 0;
        }
        if (verify->parsed()) {
            mbounds::oracle::GeneratorSpec gen;
            gen.family = parse_family(vfamily);
            auto [n_lo, n_hi] = parse_range(vn_range, "--n-range");
            gen.n_min = static_cast<int>(n_lo);
            gen.n_max = static_cast<int>(n_hi);
            std::tie(gen.lo, gen.hi) = parse_range(vvalue_range, "--value-range");
            gen.exhaustive = vexhaustive;
            gen.count = vcount;
            gen.seed = vseed;

            std::vector<std::string> selectors;
            std::istringstream in(vbounds);
            std::string tok;
            while (std::getline(in, tok, ',')) selectors.push_back(tok);

            long long failures = 0;
            Json report = mbounds::report::verify_report(gen, selectors, &failures);
            print_report(report, table);
            return failures > 0 ? 3 : 0;
        }
        return 0;
    } catch (const mbounds::ParseError& e) {
        if (e.line() > 0)
            std::cerr << "error: line " << e.line() << ": " << e.what() << "\n";
        else
            std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const mbounds::EmptySample& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const mbounds::InvalidValue& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const mbounds::InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const mbounds::IndexError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const mbounds::Error& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
