#ifndef RANKGF_CLI_HPP
#define RANKGF_CLI_HPP

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "rankgf/partition.hpp"
#include "rankgf/scan.hpp"
#include "rankgf/series.hpp"

namespace rankgf::cli {

// Exit codes. Verdicts are data and never change the exit code.
inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_verification = 2;

struct OutputRecord {
    std::vector<Part> lambda;
    Kind kind = Kind::G;
    Part weight = 1;
    std::vector<std::string> coeffs; // decimal strings
    bool unimodal = true;
    std::size_t peak = 0;
    std::optional<std::size_t> first_dip;
};

OutputRecord make_record(const Partition& lambda, Kind kind, Part weight, const CoeffSeq& coeffs);

/// One JSON object on a single line:
/// {"lambda":[..],"kind":"G","weight":1,"coeffs":["1",..],"unimodal":true,"peak":2,"first_dip":null}
std::string render_json(const OutputRecord& record);

/// "n,coeff" header and one row per degree.
std::string render_csv(const OutputRecord& record);

/// Parses the coefficient strings of a rendered record back into a series.
CoeffSeq parse_coeffs(const std::vector<std::string>& coeffs);

/// Entry point behind the `rankgf` executable; `args` excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace rankgf::cli

#endif
