#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ennola/ennola.hpp"

namespace ennola::cli {

enum ExitCode { kOk = 0, kVerifyFailed = 1, kUsage = 2, kIo = 3 };

enum class Which { V, Vprime, U, Uprime, T, Kron };
enum class Format { Text, Json, Csv, Tex };

Which parse_which(const std::string& s);
Format parse_format(const std::string& s);
std::string which_name(Which w);

/// Polynomial in tex notation: "2q^2u + 1".
std::string tex_poly(const PolyQU& p);

/// Value of the requested quantity at mu.
PolyQU evaluate(const MasterContext& ctx, Which which, const MultiPartition& mu);

/// Rows of the table for size n in printed order, zero rows omitted.
std::vector<std::pair<MultiPartition, PolyQU>> table_rows(const MasterContext& ctx, Which which, int n);

std::string format_table(Which which, int k, int n, const std::vector<std::pair<MultiPartition, PolyQU>>& rows,
                         Format format);

/// Runs the command line; output goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ennola::cli
