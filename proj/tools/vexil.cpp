// vexil command-line front end.
//
// Exit codes: 0 success, 1 error or failed check, 2 usage error,
// 3 undecided check or exhausted precision.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>

#include "vexil/constructions.hpp"
#include "vexil/errors.hpp"
#include "vexil/eval.hpp"
#include "vexil/flagspec/lower.hpp"
#include "vexil/flagspec/parser.hpp"
#include "vexil/render.hpp"

namespace {

constexpr int kExitError = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUndecided = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool names_a_file(const std::string& target) {
  return target.ends_with(".flag") || std::filesystem::exists(target);
}

vexil::FlagLayout load(const std::string& target) {
  if (names_a_file(target)) return vexil::flagspec::load_flag_file(target);
  return vexil::build_builtin(target);
}

vexil::Expr parse_scale(const std::string& text, const vexil::FlagLayout& layout) {
  const vexil::flagspec::Bindings env{{"canvas_width", layout.canvas.width()},
                                      {"canvas_height", layout.canvas.height()}};
  return vexil::flagspec::lower_expression(vexil::flagspec::parse_expression(text), env);
}

int print_report(const vexil::VerificationReport& report) {
  std::size_t width = 5;
  for (const auto& c : report.checks) width = std::max(width, c.name.size());
  std::size_t passed = 0, undecided = 0;
  std::cout << std::left << std::setw(14) << "STATUS" << std::setw(width + 2) << "CHECK"
            << "DETAIL\n";
  for (const auto& c : report.checks) {
    std::cout << std::setw(14) << vexil::status_name(c.status) << std::setw(width + 2) << c.name
              << c.detail << "\n";
    passed += c.status == vexil::CheckStatus::ProvedEqual || c.status == vexil::CheckStatus::Pass;
    undecided += c.status == vexil::CheckStatus::Undecided;
  }
  const std::size_t failed = report.checks.size() - passed - undecided;
  std::cout << report.checks.size() << " checks: " << passed << " passed, " << failed
            << " failed, " << undecided << " undecided\n";
  if (failed) return kExitError;
  return undecided ? kExitUndecided : 0;
}

int cmd_build(const std::string& target, const std::string& out_path, const std::string& scale,
              int digits, int bits, const std::string& format, const std::string& unit,
              const std::string& background) {
  const auto layout = load(target);
  vexil::RenderOptions opts;
  opts.scale = parse_scale(scale, layout);
  opts.digits = digits;
  opts.precision_bits = bits;
  if (!unit.empty()) opts.unit = unit;
  if (background == "none") {
    opts.background.reset();
  } else {
    opts.background = background;
  }
  try {
    vexil::validate(opts);
  } catch (const vexil::InvalidOption& e) {
    throw UsageError(e.what());
  }
  const std::string doc = format == "json" ? vexil::json_emit(layout, opts)
                                           : vexil::svg_emit(layout, opts);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw vexil::Error("cannot write " + out_path);
  out << doc;
  out.close();
  if (!out) throw vexil::Error("cannot write " + out_path);
  const vexil::Expr w = opts.scale * layout.canvas.width();
  const vexil::Expr h = opts.scale * layout.canvas.height();
  std::cout << "wrote " << out_path << ": " << layout.name << " " << format << " "
            << vexil::to_decimal(w, digits, bits) << unit << " x "
            << vexil::to_decimal(h, digits, bits) << unit << "\n";
  return 0;
}

int cmd_verify(const std::string& target) {
  vexil::VerificationReport report;
  std::string name = target;
  if (names_a_file(target)) {
    const auto layout = vexil::flagspec::load_flag_file(target);
    name = layout.name;
    report = vexil::verify_layout_identities(layout);
    if (name == vexil::kChile1818)
      for (auto& c : vexil::verify_angle_configuration(layout).checks) report.checks.push_back(c);
  } else {
    report = vexil::verify_flag_identities(target);
    if (name == vexil::kChile1818)
      for (auto& c : vexil::verify_angle_configuration(vexil::build_builtin(name)).checks)
        report.checks.push_back(c);
  }
  return print_report(report);
}

int cmd_eval(const std::string& text, int digits, int bits) {
  const auto e = vexil::flagspec::lower_expression(vexil::flagspec::parse_expression(text));
  std::cout << vexil::to_decimal(e, digits, bits) << "\n";
  return 0;
}

int cmd_ratio(const std::string& target, int digits) {
  const vexil::Expr r = names_a_file(target) ? vexil::canvas_ratio(load(target))
                                             : vexil::builtin_ratio(target);
  std::cout << vexil::to_decimal(r, digits) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact golden-ratio flag constructions."};
  app.require_subcommand(1);
  app.footer(
      "Exit codes: 0 ok, 1 error or failed check, 2 usage, 3 undecided or precision exhausted.");

  std::string target, out_path, scale = "1", format = "svg", unit, background = "#FFFFFF";
  int digits = 12, eval_digits = 12, ratio_digits = 6, bits = 64, eval_bits = 128;

  auto* build = app.add_subcommand("build", "Render a builtin or .flag file to SVG or JSON.");
  build->add_option("target", target, "Builtin name or path to a .flag file")->required();
  build->add_option("--out,-o", out_path, "Output path")->required();
  build->add_option("--scale", scale,
                    "Output units per canvas unit; an expression that may use canvas_width "
                    "and canvas_height, e.g. \"2.4/canvas_width\"")
      ->capture_default_str();
  build->add_option("--digits", digits, "Significant digits per coordinate (>= 3)")
      ->check(CLI::Range(3, 10000))
      ->capture_default_str();
  build->add_option("--precision-bits", bits, "Starting interval precision")
      ->check(CLI::Range(2, 1 << 20))
      ->capture_default_str();
  build->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"svg", "json"}))
      ->capture_default_str();
  build->add_option("--unit", unit, "Unit suffix for the SVG width/height attributes, e.g. m");
  build->add_option("--background", background, "Background #RRGGBB, or none")
      ->capture_default_str();

  auto* verify = app.add_subcommand(
      "verify", "Prove the stated identities of a builtin or .flag file and print a table.");
  verify->add_option("target", target, "Builtin name or path to a .flag file")->required();

  std::string expr_text;
  auto* eval = app.add_subcommand(
      "eval",
      "Evaluate an expression exactly. Prints N significant digits, correctly rounded "
      "half-to-even (never truncated), so 0.72654... prints as 0.727 at 3 digits.");
  eval->add_option("expr", expr_text, "Expression using numbers, + - * /, sqrt(), phi")
      ->required();
  eval->add_option("--digits", eval_digits, "Significant digits, rounded half-to-even")
      ->check(CLI::Range(1, 10000))
      ->capture_default_str();
  eval->add_option("--precision-bits", eval_bits, "Starting interval precision")
      ->check(CLI::Range(2, 1 << 20))
      ->capture_default_str();

  auto* ratio = app.add_subcommand(
      "ratio", "Print width/height of a builtin or .flag file, rounded half-to-even.");
  ratio->add_option("target", target, "Builtin name or path to a .flag file")->required();
  ratio->add_option("--digits", ratio_digits, "Significant digits")
      ->check(CLI::Range(1, 10000))
      ->capture_default_str();

  auto* list = app.add_subcommand("list", "Print the builtin flag names.");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*build) return cmd_build(target, out_path, scale, digits, bits, format, unit, background);
    if (*verify) return cmd_verify(target);
    if (*eval) return cmd_eval(expr_text, eval_digits, eval_bits);
    if (*ratio) return cmd_ratio(target, ratio_digits);
    if (*list) {
      for (auto name : vexil::builtin_names()) std::cout << name << "\n";
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "vexil: usage: " << e.what() << "\n";
    return kExitUsage;
  } catch (const vexil::PrecisionExhausted& e) {
    std::cerr << "vexil: undecided: " << e.what() << "\n";
    return kExitUndecided;
  } catch (const std::exception& e) {
    // positioned .flag errors are prefixed with the file they point into
    const bool in_file = dynamic_cast<const vexil::flagspec::Positioned*>(&e) && !*eval &&
                         names_a_file(target);
    const auto* cert = dynamic_cast<const vexil::CertificationError*>(&e);
    const bool undecided =
        cert && cert->kind() == vexil::CertificationError::Kind::Undetermined;
    std::cerr << "vexil: " << (undecided ? "undecided: " : "error: ")
              << (in_file ? target + ":" : "") << e.what() << "\n";
    return undecided ? kExitUndecided : kExitError;
  }
  return kExitUsage;
}
