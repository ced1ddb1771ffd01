#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ennola/cache.hpp"
#include "ennola/characters.hpp"
#include "ennola/parallel.hpp"
#include "ennola/verify.hpp"

namespace ennola::cli {

namespace fs = std::filesystem;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::vector<std::pair<std::string, Which>> kWhich = {
    {"V", Which::V}, {"Vprime", Which::Vprime}, {"U", Which::U},
    {"Uprime", Which::Uprime}, {"T", Which::T}, {"kron", Which::Kron}};

const std::vector<std::pair<std::string, Format>> kFormats = {
    {"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}, {"tex", Format::Tex}};

std::string tex_header(Which w) {
  switch (w) {
    case Which::V: return "V_{\\bm \\mu}";
    case Which::Vprime: return "V'_{\\bm \\mu}";
    case Which::U: return "U_{\\bm \\mu}";
    case Which::Uprime: return "U'_{\\bm \\mu}";
    case Which::T: return "\\mathcal{T}_{\\bm \\mu}";
    case Which::Kron: return "g_{\\bm \\mu}";
  }
  return "";
}

nlohmann::json mu_json(const MultiPartition& mu) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& p : mu.components()) a.push_back(p.to_string());
  return a;
}

std::string csv_header(std::size_t k) {
  std::string s;
  for (std::size_t i = 1; i <= k; ++i) s += "mu" + std::to_string(i) + ",";
  return s + "polynomial\n";
}

std::string csv_row(const MultiPartition& mu, const PolyQU& p) {
  std::string s;
  for (const auto& c : mu.components()) s += c.to_string() + ",";
  return s + p.to_string() + "\n";
}

std::string tex_row(const MultiPartition& mu, const PolyQU& p) {
  std::string s;
  for (const auto& c : mu.components()) s += c.to_display() + " & ";
  return s + tex_poly(p) + " \\\\\n";
}

struct Common {
  int k = 3;
  bool k_given = false;
  std::string format = "text";
  std::string cache_dir;
  unsigned jobs = 1;
};

MasterContext make_context(const Common& common, int k, int N, std::ostream& err) {
  ContextOptions options;
  options.cache_dir = common.cache_dir.empty() ? default_cache_dir() : fs::path(common.cache_dir);
  options.on_warning = [&err](const std::string& w) { err << "warning: " << w << '\n'; };
  return build_context(k, N, options);
}

int cmd_pair(const Common& common, const std::string& which_s, const std::string& mu_s, const std::string& type_s,
             std::ostream& out, std::ostream& err) {
  const Which which = parse_which(which_s);
  const Format format = parse_format(common.format);
  if (mu_s.empty() == type_s.empty()) throw UsageError("pair needs exactly one of --mu or --type");
  if (!type_s.empty()) {
    if (which != Which::V && which != Which::Vprime) throw UsageError("--type is supported for --which V and Vprime only");
    const MultiType omega = parse_multitype(type_s);
    const int k = static_cast<int>(omega.k());
    if (common.k_given && k != common.k) throw UsageError("--type has " + std::to_string(k) + " components but --k is " + std::to_string(common.k));
    const MasterContext ctx = make_context(common, k, omega.size(), err);
    const PolyQU p = which == Which::V ? V_poly(ctx, omega) : Vprime_poly(ctx, omega);
    switch (format) {
      case Format::Text: out << p.to_string() << '\n'; break;
      case Format::Tex: out << tex_poly(p) << '\n'; break;
      case Format::Csv: {
        std::string header;
        std::string row;
        for (std::size_t i = 0; i < omega.k(); ++i) {
          header += "omega" + std::to_string(i + 1) + ",";
          row += "\"" + omega[i].to_string() + "\",";
        }
        out << header << "polynomial\n" << row << p.to_string() << '\n';
        break;
      }
      case Format::Json: {
        nlohmann::json types = nlohmann::json::array();
        for (const auto& t : omega.components()) types.push_back(t.to_string());
        out << nlohmann::json({{"which", which_name(which)}, {"type", types}, {"poly", p.to_json()}, {"text", p.to_string()}}).dump()
            << '\n';
        break;
      }
    }
    return kOk;
  }
  const MultiPartition mu = parse_multipartition(mu_s);
  const int k = static_cast<int>(mu.k());
  if (common.k_given && k != common.k) throw UsageError("--mu has " + std::to_string(k) + " components but --k is " + std::to_string(common.k));
  if (mu.size() < 1) throw UsageError("--mu must have positive size");
  PolyQU p;
  if (which == Which::Kron) {
    p = PolyQU(kronecker(mu));
  } else {
    const MasterContext ctx = make_context(common, k, mu.size(), err);
    p = evaluate(ctx, which, mu);
  }
  switch (format) {
    case Format::Text: out << p.to_string() << '\n'; break;
    case Format::Tex: out << tex_row(mu, p); break;
    case Format::Csv: out << csv_header(mu.k()) << csv_row(mu, p); break;
    case Format::Json:
      out << nlohmann::json({{"which", which_name(which)}, {"mu", mu_json(mu)}, {"poly", p.to_json()}, {"text", p.to_string()}}).dump()
          << '\n';
      break;
  }
  return kOk;
}

int cmd_table(const Common& common, const std::string& which_s, int n, std::ostream& out, std::ostream& err) {
  const Which which = parse_which(which_s);
  const Format format = parse_format(common.format);
  if (n < 1) throw UsageError("--n must be positive");
  std::vector<std::pair<MultiPartition, PolyQU>> rows;
  if (which == Which::Kron) {
    for (auto& mu : enumerate_sorted_multipartitions(n, common.k)) {
      PolyQU p(kronecker(mu));
      if (!p.is_zero()) rows.emplace_back(std::move(mu), std::move(p));
    }
  } else {
    const MasterContext ctx = make_context(common, common.k, n, err);
    rows = table_rows(ctx, which, n);
  }
  out << format_table(which, common.k, n, rows, format);
  return kOk;
}

int cmd_verify(const Common& common, int nmax, bool inject, std::ostream& out, std::ostream& err) {
  const Format format = parse_format(common.format);
  if (nmax < 1) throw UsageError("--n must be positive");
  if (format == Format::Csv || format == Format::Tex) throw UsageError("verify supports --format text or json");
  const MasterContext ctx = make_context(common, common.k, nmax, err);
  VerifyOptions options;
  if (inject) {
    options.uprime_hook = [](const MultiPartition& mu, PolyQU p) { return mu.size() == 2 ? -p : p; };
  }
  const VerifyReport report = verify_suite(ctx, options);
  if (format == Format::Json) {
    out << report.to_json().dump(2) << '\n';
  } else {
    out << report.to_text();
  }
  return report.ok() ? kOk : kVerifyFailed;
}

int cmd_cache(const Common& common, const std::string& action, int nmax, std::ostream& out, std::ostream&) {
  const fs::path dir = common.cache_dir.empty() ? default_cache_dir() : fs::path(common.cache_dir);
  if (action == "clear") {
    const std::size_t removed = clear_cache(dir);
    out << "removed " << removed << " cache file" << (removed == 1 ? "" : "s") << " from " << dir.string() << '\n';
    return kOk;
  }
  if (action != "build") throw UsageError("cache action must be build or clear");
  if (nmax < 1) throw UsageError("--n must be positive");
  const MasterContext ctx = build_context(common.k, nmax);
  for (int n = 1; n <= nmax; ++n) save_psi(dir, ctx.psi_schur(n));
  out << "wrote Psi for k=" << common.k << ", n=1.." << nmax << " to " << dir.string() << '\n';
  return kOk;
}

}  // namespace

Which parse_which(const std::string& s) {
  for (const auto& [name, w] : kWhich) {
    if (name == s) return w;
  }
  throw UsageError("unknown --which value '" + s + "' (expected V, Vprime, U, Uprime, T or kron)");
}

Format parse_format(const std::string& s) {
  for (const auto& [name, f] : kFormats) {
    if (name == s) return f;
  }
  throw UsageError("unknown --format value '" + s + "' (expected text, json, csv or tex)");
}

std::string which_name(Which w) {
  for (const auto& [name, v] : kWhich) {
    if (v == w) return name;
  }
  return "";
}

std::string tex_poly(const PolyQU& p) {
  std::string s = p.to_string();
  s.erase(std::remove(s.begin(), s.end(), '*'), s.end());
  return s;
}

PolyQU evaluate(const MasterContext& ctx, Which which, const MultiPartition& mu) {
  switch (which) {
    case Which::V: return V_poly(ctx, mu);
    case Which::Vprime: return Vprime_poly(ctx, mu);
    case Which::U: return U_poly(ctx, mu);
    case Which::Uprime: return Uprime_poly(ctx, mu);
    case Which::T: return T_poly(ctx, mu);
    case Which::Kron: return PolyQU(kronecker(mu));
  }
  return PolyQU();
}

std::vector<std::pair<MultiPartition, PolyQU>> table_rows(const MasterContext& ctx, Which which, int n) {
  const auto mus = enumerate_sorted_multipartitions(n, ctx.k());
  if (which != Which::V && which != Which::Vprime && which != Which::Kron) ctx.tau_schur(n);
  std::vector<PolyQU> values(mus.size());
  parallel_for(mus.size(), [&](std::size_t i) { values[i] = evaluate(ctx, which, mus[i]); });
  std::vector<std::pair<MultiPartition, PolyQU>> rows;
  for (std::size_t i = 0; i < mus.size(); ++i) {
    if (!values[i].is_zero()) rows.emplace_back(mus[i], std::move(values[i]));
  }
  return rows;
}

std::string format_table(Which which, int k, int n, const std::vector<std::pair<MultiPartition, PolyQU>>& rows,
                         Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::Text:
      for (const auto& [mu, p] : rows) {
        for (const auto& c : mu.components()) os << c.to_display() << " | ";
        os << p.to_string() << '\n';
      }
      break;
    case Format::Csv:
      os << csv_header(static_cast<std::size_t>(k));
      for (const auto& [mu, p] : rows) os << csv_row(mu, p);
      break;
    case Format::Json: {
      nlohmann::json a = nlohmann::json::array();
      for (const auto& [mu, p] : rows) a.push_back({{"mu", mu_json(mu)}, {"poly", p.to_json()}, {"text", p.to_string()}});
      os << nlohmann::json({{"which", which_name(which)}, {"k", k}, {"n", n}, {"rows", a}}).dump(1) << '\n';
      break;
    }
    case Format::Tex:
      os << "\\begin{tabular}{" << std::string(static_cast<std::size_t>(k), 'L') << "|L}\n";
      for (int i = 1; i <= k; ++i) os << "\\mu^" << i << " & ";
      os << tex_header(which) << " \\\\\n\\hline\n";
      for (const auto& [mu, p] : rows) os << tex_row(mu, p);
      os << "\\end{tabular}\n";
      break;
  }
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact tensor-product multiplicity polynomials for GL_n(F_q) and GU_n(F_q)", "ennola"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&common](CLI::App* sub) {
    sub->add_option("--k", common.k, "Number of tensor factors")->check(CLI::Range(1, 12));
    sub->add_option("--format", common.format, "Output format: text, json, csv or tex");
    sub->add_option("--cache-dir", common.cache_dir, "Directory of the Psi cache");
    sub->add_option("--jobs", common.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  };

  std::string which;
  std::string mu;
  std::string type;
  int n = 0;
  bool inject = false;
  std::string action;

  CLI::App* pair = app.add_subcommand("pair", "Print one polynomial");
  add_common(pair);
  pair->add_option("--which", which, "V, Vprime, U, Uprime, T or kron")->required();
  pair->add_option("--mu", mu, "Multipartition, components separated by ',' (e.g. 1^4,2.1^2,2^2)");
  pair->add_option("--type", type, "Multitype, components separated by ',' (e.g. 2:1^1,1:2^1,1:1^2^1)");

  CLI::App* table = app.add_subcommand("table", "Print all nonzero values for one size");
  add_common(table);
  table->add_option("--which", which, "V, Vprime, U, Uprime, T or kron")->required();
  table->add_option("--n", n, "Size")->required();

  CLI::App* verify = app.add_subcommand("verify", "Check the duality identities up to a size");
  add_common(verify);
  verify->add_option("--n,--nmax", n, "Largest size")->required();
  verify->add_flag("--inject-sign-bug", inject, "Negate U' at n = 2 (self-test of the failure path)")->group("");

  CLI::App* cache = app.add_subcommand("cache", "Build or clear the Psi cache");
  add_common(cache);
  cache->add_option("action", action, "build or clear")->required();
  cache->add_option("--n,--nmax", n, "Largest size to build");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
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
  for (CLI::App* sub : {pair, table, verify, cache}) {
    if (sub->parsed() && sub->count("--k") > 0) common.k_given = true;
  }
  set_parallelism(common.jobs);

  try {
    if (pair->parsed()) return cmd_pair(common, which, mu, type, out, err);
    if (table->parsed()) return cmd_table(common, which, n, out, err);
    if (verify->parsed()) return cmd_verify(common, n, inject, out, err);
    if (cache->parsed()) return cmd_cache(common, action, n, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const CacheError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  }
  return kUsage;
}

}  // namespace ennola::cli
