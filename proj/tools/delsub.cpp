// Command-line front end: params, encode, corrupt, decode, verify.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>

#include "delsub/cli.hpp"

namespace {

using delsub::cli::Format;
using delsub::cli::RunConfig;

struct Streams {
  std::unique_ptr<std::ifstream> in_file;
  std::unique_ptr<std::ofstream> out_file;
  std::istream* in = &std::cin;
  std::ostream* out = &std::cout;
};

Streams open_streams(const std::string& in_path, const std::string& out_path) {
  Streams s;
  if (!in_path.empty() && in_path != "-") {
    s.in_file = std::make_unique<std::ifstream>(in_path, std::ios::binary);
    if (!*s.in_file) throw std::runtime_error("cannot open " + in_path);
    s.in = s.in_file.get();
  }
  if (!out_path.empty() && out_path != "-") {
    s.out_file = std::make_unique<std::ofstream>(out_path, std::ios::binary);
    if (!*s.out_file) throw std::runtime_error("cannot open " + out_path);
    s.out = s.out_file.get();
  }
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Systematic single-deletion s-substitution correcting code"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string in_path;
  std::string out_path;
  const std::map<std::string, Format> formats{{"text", Format::text}, {"bin", Format::bin}};

  auto add_io = [&](CLI::App* sub) {
    sub->add_option("--in", in_path, "Input file (default stdin)");
    sub->add_option("--out", out_path, "Output file (default stdout)");
  };

  auto* params = app.add_subcommand("params", "Print derived code parameters");
  params->add_option("--k", cfg.k, "Message length")->required();
  params->add_option("--s", cfg.s, "Substitution budget")->required();
  add_io(params);

  auto* enc = app.add_subcommand("encode", "Encode k-bit message lines");
  enc->add_option("--k", cfg.k, "Message length")->required();
  enc->add_option("--s", cfg.s, "Substitution budget")->required();
  enc->add_option("--format", cfg.format, "Record format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  add_io(enc);

  auto* cor = app.add_subcommand("corrupt", "Apply one deletion and up to s flips per codeword");
  cor->add_option("--s", cfg.s, "Substitution budget")->required();
  cor->add_option("--seed", cfg.seed, "Master seed");
  add_io(cor);

  auto* dec = app.add_subcommand("decode", "Decode corrupted codewords to messages");
  add_io(dec);

  auto* ver = app.add_subcommand("verify", "Run a verification suite");
  ver->add_option("kind", cfg.kind, "lemma3 | roundtrip | sieve")->required();
  ver->add_option("--L,--n", cfg.length, "Block length (lemma3) or code length (sieve)");
  ver->add_option("--k", cfg.k, "Message length (roundtrip)");
  ver->add_option("--s", cfg.s, "Substitution budget");
  ver->add_option("--seed", cfg.seed, "Master seed (roundtrip)");
  ver->add_option("--trials", cfg.trials, "Random trials (roundtrip)");
  ver->add_flag("--exhaustive", cfg.exhaustive, "Enumerate every message and corruption (roundtrip)");
  ver->add_option("--max-n", cfg.max_n, "Largest length the sieve will enumerate");
  add_io(ver);

  auto* lemma3 = app.add_subcommand("verify-lemma3", "Shorthand for 'verify lemma3'");
  lemma3->add_option("--L", cfg.length, "Block length")->required();
  lemma3->add_option("--s", cfg.s, "Substitution budget")->required();
  lemma3->add_option("--max-n", cfg.max_n, "Largest length to enumerate");
  add_io(lemma3);

  CLI11_PARSE(app, argc, argv);

  try {
    Streams io = open_streams(in_path, out_path);
    if (*params) return delsub::cli::cmd_params(cfg, *io.out, std::cerr);
    if (*enc) return delsub::cli::cmd_encode(cfg, *io.in, *io.out, std::cerr);
    if (*cor) return delsub::cli::cmd_corrupt(cfg, *io.in, *io.out, std::cerr);
    if (*dec) return delsub::cli::cmd_decode(cfg, *io.in, *io.out, std::cerr);
    if (*lemma3) cfg.kind = "lemma3";
    return delsub::cli::cmd_verify(cfg, *io.out, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "delsub: " << e.what() << "\n";
    return 2;
  }
}
