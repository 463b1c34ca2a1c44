#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "polysec/compose.hpp"
#include "polysec/error.hpp"
#include "polysec/fuzz.hpp"
#include "polysec/heptagon.hpp"
#include "polysec/hexagon.hpp"
#include "polysec/io.hpp"
#include "polysec/slack.hpp"
#include "polysec/svg.hpp"

namespace {

using namespace polysec;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCertification = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ExtensionOptions extension_options() {
  ExtensionOptions opts;
  if (const char* env = std::getenv("POLYSEC_MAX_RETRIES")) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(env, &used);
      if (used != std::string(env).size() || v < 0) throw std::invalid_argument(env);
      opts.max_retries = v;
    } catch (const std::exception&) {
      throw UsageError(std::string("POLYSEC_MAX_RETRIES must be a nonnegative integer, got \"") + env + "\"");
    }
  }
  return opts;
}

Polygon load_polygon(const std::string& path) {
  return validate(points_from_json(parse_json(read_file(path))));
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_file(out_path, text);
  }
}

int cmd_validate(const std::string& path) {
  std::cout << to_json(load_polygon(path)).dump() << "\n";
  return kExitOk;
}

int cmd_extend(const std::string& path, const std::string& mode, const std::string& out_path) {
  const Polygon p = load_polygon(path);
  const long n = static_cast<long>(p.size());
  const ExtensionOptions opts = extension_options();
  std::optional<SectionedPolytope> ext;
  std::string bound;
  if (n < 6) {
    throw Error(Errc::TooFewVerticesForConstruction, "extend needs at least 6 vertices");
  } else if (n == 6) {
    const auto ic = hexagon_ic(p);
    if (ic.value == 5) {
      ext = hexagon_extension5(p, opts);
      bound = "ic = 5 (lines concurrent for r = " + std::to_string(*ic.witness) + ")";
    } else {
      ext = trivial_section(p, 3);
      bound = "ic = 6 (no concurrent labeling; trivial self-extension)";
    }
  } else if (mode == "3d" || (mode == "auto" && n == 7)) {
    ext = ngon_3d_extension(p, opts);
    bound = "3-dimensional bound n - 1 = " + std::to_string(n - 1) + ", lower bound " +
            std::to_string(lower_bound_3d(n));
  } else {
    ext = ngon_extension(p, opts);
    bound = "bounds: dimension 2 + floor(n/7) = " + std::to_string(2 + n / 7) +
            ", vertices ceil(6n/7) = " + std::to_string((6 * n + 6) / 7);
  }
  emit(to_json(*ext).dump() + "\n", out_path);
  std::ostream& info = out_path.empty() ? std::cerr : std::cout;
  info << "certified: dimension " << ext->dim << ", " << ext->vertices.size() << " vertices; " << bound << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& path) {
  const SectionedPolytope s = sectioned_from_json(parse_json(read_file(path)));
  const SectionCheck check = check_section(s);
  if (check.ok) {
    std::cout << "PASS\n";
    return kExitOk;
  }
  std::cout << "FAIL: " << check.detail << "\n";
  return kExitDomain;
}

int cmd_slack(const std::string& path) {
  std::cout << to_json(slack_matrix(load_polygon(path))).dump() << "\n";
  return kExitOk;
}

int cmd_factorize(const std::string& polygon_path, const std::string& extension_path, const std::string& out_path) {
  const Polygon p = load_polygon(polygon_path);
  const std::string raw = read_file(extension_path);
  SectionedPolytope s = sectioned_from_json(parse_json(raw));
  if (!verify_section(s)) throw Error(Errc::FactorizationMismatch, "extension file does not certify its section");
  const SlackFactorization f = factorize_from_section(p, s);
  emit(to_json(f, sha256_hex(raw)).dump() + "\n", out_path);
  return kExitOk;
}

int cmd_fuzz(const std::string& target, std::size_t count, std::uint64_t seed) {
  const FuzzTarget t = parse_fuzz_target(target);
  const auto start = std::chrono::steady_clock::now();
  const FuzzReport report = run_fuzz(t, count, seed, extension_options());
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  for (const auto& rec : report.records) std::cout << rec.dump() << "\n";
  std::cout << report.summary().dump() << "\n";
  std::cerr << "fuzz " << target << ": " << count << " cases in " << elapsed.count() << " s\n";
  return report.failures == 0 ? kExitOk : kExitCertification;
}

int cmd_svg(const std::string& path, bool std_lines, bool labels, const std::string& out_path) {
  emit(render_svg(load_polygon(path), {std_lines, labels}), out_path);
  return kExitOk;
}

void report_error(const std::string& kind, const std::string& message) {
  std::cerr << nlohmann::json{{"error", kind}, {"message", message}}.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact sections of polytopes: certified small extensions of polygons"};
  app.require_subcommand(1);

  std::string path, path2, out_path, mode = "auto", target;
  std::size_t count = 100;
  std::uint64_t seed = 1;
  bool std_lines = false, labels = false;

  auto* validate_cmd = app.add_subcommand("validate", "Check a polygon file and print its canonical form");
  validate_cmd->add_option("path", path, "Polygon JSON")->required();

  auto* extend_cmd = app.add_subcommand("extend", "Build a certified extension of a polygon");
  extend_cmd->add_option("path", path, "Polygon JSON")->required();
  extend_cmd->add_option("--mode", mode, "auto, 3d or join")->check(CLI::IsMember({"auto", "3d", "join"}));
  extend_cmd->add_option("--out", out_path, "Write the extension here instead of stdout");

  auto* verify_cmd = app.add_subcommand("verify", "Re-certify an extension file");
  verify_cmd->add_option("path", path, "Extension JSON")->required();

  auto* slack_cmd = app.add_subcommand("slack", "Print the slack matrix of a polygon");
  slack_cmd->add_option("path", path, "Polygon JSON")->required();

  auto* factorize_cmd = app.add_subcommand("factorize", "Nonnegative slack factorization from an extension");
  factorize_cmd->add_option("polygon", path, "Polygon JSON")->required();
  factorize_cmd->add_option("extension", path2, "Extension JSON")->required();
  factorize_cmd->add_option("--out", out_path, "Write the factorization here instead of stdout");

  auto* fuzz_cmd = app.add_subcommand("fuzz", "Seeded property checks");
  fuzz_cmd->add_option("target", target, "invariant, heptagon, ngon or hexagon")
      ->required()
      ->check(CLI::IsMember({"invariant", "heptagon", "ngon", "hexagon"}));
  fuzz_cmd->add_option("--count", count, "Number of cases");
  fuzz_cmd->add_option("--seed", seed, "Base seed");

  auto* svg_cmd = app.add_subcommand("svg", "Render a polygon");
  svg_cmd->add_option("path", path, "Polygon JSON")->required();
  svg_cmd->add_flag("--std-lines", std_lines, "Draw standardization lines (heptagons)");
  svg_cmd->add_flag("--labels", labels, "Label vertices");
  svg_cmd->add_option("--out", out_path, "Write the SVG here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*validate_cmd) return cmd_validate(path);
    if (*extend_cmd) return cmd_extend(path, mode, out_path);
    if (*verify_cmd) return cmd_verify(path);
    if (*slack_cmd) return cmd_slack(path);
    if (*factorize_cmd) return cmd_factorize(path, path2, out_path);
    if (*fuzz_cmd) return cmd_fuzz(target, count, seed);
    if (*svg_cmd) return cmd_svg(path, std_lines, labels, out_path);
  } catch (const UsageError& e) {
    report_error("Usage", e.what());
    return kExitUsage;
  } catch (const Error& e) {
    report_error(std::string(errc_name(e.code())), e.what());
    return is_certification_failure(e.code()) ? kExitCertification : kExitDomain;
  } catch (const std::exception& e) {
    report_error("Internal", e.what());
    return kExitCertification;
  }
  return kExitUsage;
}
