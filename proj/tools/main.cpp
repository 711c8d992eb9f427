// Copyright 2026 The Ecstego Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ecstego/admissible.hpp"
#include "ecstego/bits.hpp"
#include "ecstego/bytes.hpp"
#include "ecstego/curve.hpp"
#include "ecstego/encoding.hpp"
#include "ecstego/errors.hpp"
#include "ecstego/oracle.hpp"
#include "ecstego/pke.hpp"
#include "ecstego/randtest.hpp"
#include "ecstego/rng.hpp"
#include "ecstego/sha256.hpp"
#include "ecstego/stego.hpp"

namespace {

using namespace ecstego;

constexpr const char* kNoIntegrityNote =
    "note: ciphertexts carry no integrity protection; a wrong key or "
    "corrupted input yields garbage or a framing error";

Bytes read_file_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path);
  Bytes data((std::istreambuf_iterator<char>(in)),
             std::istreambuf_iterator<char>());
  return data;
}

std::string read_file_text(const std::string& path) {
  const Bytes raw = read_file_bytes(path);
  return std::string(raw.begin(), raw.end());
}

void write_file_bytes(const std::string& path, const Bytes& data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FormatError("cannot open " + path + " for writing");
  out.write(reinterpret_cast<const char*>(data.data()),
            static_cast<std::streamsize>(data.size()));
  if (!out) throw FormatError("write failed for " + path);
}

void write_file_text(const std::string& path, const std::string& text) {
  write_file_bytes(path, Bytes(text.begin(), text.end()));
}

// Key files: one header line "ecstego-pk curve=<name> encoding=<enc> s=<n>"
// (resp. ecstego-sk), then one lowercase hex line. The pk hex is the
// serialized curve point; the sk hex is the scalar, big-endian at the
// group-order width.
struct KeyHeader {
  std::string magic;
  CurvePtr curve;
  EncodingKind kind;
  std::size_t s;
};

KeyHeader parse_key_header(const std::string& line, const std::string& magic) {
  std::istringstream stream(line);
  std::string token;
  if (!(stream >> token) || token != magic) {
    throw FormatError("bad key header, expected " + magic);
  }
  std::map<std::string, std::string> fields;
  while (stream >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) throw FormatError("bad key header field");
    fields[token.substr(0, eq)] = token.substr(eq + 1);
  }
  for (const char* key : {"curve", "encoding", "s"}) {
    if (!fields.count(key)) {
      throw FormatError(std::string("key header is missing ") + key);
    }
  }
  if (fields.size() != 3) throw FormatError("unexpected key header field");
  KeyHeader header;
  header.magic = magic;
  header.curve = registry_get(fields["curve"]);
  header.kind = encoding_from_name(fields["encoding"]);
  const long s = std::stol(fields["s"]);
  if (s < 2 || s > 8) throw FormatError("tensor arity out of range");
  header.s = static_cast<std::size_t>(s);
  return header;
}

std::pair<KeyHeader, Bytes> read_key_file(const std::string& path,
                                          const std::string& magic) {
  std::istringstream stream(read_file_text(path));
  std::string header_line;
  std::string hex_line;
  if (!std::getline(stream, header_line) || !std::getline(stream, hex_line)) {
    throw FormatError("key file " + path + " is truncated");
  }
  if (!header_line.empty() && header_line.back() == '\r') header_line.pop_back();
  if (!hex_line.empty() && hex_line.back() == '\r') hex_line.pop_back();
  return {parse_key_header(header_line, magic), from_hex(hex_line)};
}

std::string key_header_line(const char* magic, const PublicKey& pub) {
  std::ostringstream line;
  line << magic << " curve=" << pub.curve->name()
       << " encoding=" << encoding_name(pub.kind) << " s=" << pub.s;
  return line.str();
}

PublicKey read_public_key(const std::string& path) {
  const auto [header, raw] = read_key_file(path, "ecstego-pk");
  PublicKey pub;
  pub.curve = header.curve;
  pub.kind = header.kind;
  pub.s = header.s;
  pub.point = header.curve->deserialize_point(raw);
  return pub;
}

KeyPair read_secret_key(const std::string& path) {
  const auto [header, raw] = read_key_file(path, "ecstego-sk");
  const std::size_t width = (mpz_sizeinbase(header.curve->q().get_mpz_t(), 2) + 7) / 8;
  if (raw.size() != width) throw FormatError("secret key has the wrong width");
  mpz_class sk;
  mpz_import(sk.get_mpz_t(), raw.size(), 1, 1, 1, 0, raw.data());
  if (sk <= 0 || sk >= header.curve->q()) {
    throw FormatError("secret key is out of range");
  }
  KeyPair keys;
  keys.pub.curve = header.curve;
  keys.pub.kind = header.kind;
  keys.pub.s = header.s;
  keys.pub.point = header.curve->scalar_mul(sk, header.curve->g());
  keys.sk = sk;
  return keys;
}

void write_key_files(const KeyPair& keys, const std::string& pk_path,
                     const std::string& sk_path) {
  const Bytes pk_raw = keys.pub.curve->serialize_point(keys.pub.point);
  write_file_text(pk_path, key_header_line("ecstego-pk", keys.pub) + "\n" +
                               to_hex(pk_raw) + "\n");
  const std::size_t width =
      (mpz_sizeinbase(keys.pub.curve->q().get_mpz_t(), 2) + 7) / 8;
  Bytes sk_raw(width, 0);
  const std::size_t sk_bytes = (mpz_sizeinbase(keys.sk.get_mpz_t(), 2) + 7) / 8;
  std::size_t count = 0;
  mpz_export(sk_raw.data() + width - sk_bytes, &count, 1, 1, 1, 0,
             keys.sk.get_mpz_t());
  write_file_text(sk_path, key_header_line("ecstego-sk", keys.pub) + "\n" +
                               to_hex(sk_raw) + "\n");
}

std::unique_ptr<Rng> make_rng(bool seed_given, std::uint64_t seed) {
  if (seed_given) return std::make_unique<DeterministicRng>(seed);
  return std::make_unique<SystemRng>();
}

PaddingPolicy policy_from_name(const std::string& name) {
  if (name == "k8") return PaddingPolicy::kEighth;
  if (name == "k4") return PaddingPolicy::kQuarter;
  throw FormatError("unknown t policy " + name);
}

std::string fingerprint(const PublicKey& pub) {
  const Sha256::Digest digest =
      Sha256::digest(pub.curve->serialize_point(pub.point));
  return to_hex(Bytes(digest.begin(), digest.begin() + 8));
}

void print_report_line(const std::string& name, double value, bool pass) {
  std::printf("%s\t%.6f\t%s\n", name.c_str(), value, pass ? "PASS" : "FAIL");
}

int run_randtest_streams(const BitString& bits, std::size_t streams,
                         double alpha) {
  if (streams == 1) {
    const auto reports = run_suite(bits, alpha);
    bool all = true;
    for (const auto& r : reports) {
      print_report_line(r.name, r.p_value, r.pass);
      all = all && r.pass;
    }
    std::printf("summary\t%zu/%zu\t%s\n",
                static_cast<std::size_t>(
                    std::count_if(reports.begin(), reports.end(),
                                  [](const auto& r) { return r.pass; })),
                reports.size(), all ? "PASS" : "FAIL");
    if (!all) throw StatError("randomness tests failed");
    return 0;
  }
  const auto parts = split_streams(bits, streams);
  std::vector<std::string> names;
  std::vector<std::size_t> passed;
  for (const auto& part : parts) {
    const auto reports = run_suite(part, alpha);
    if (names.empty()) {
      for (const auto& r : reports) names.push_back(r.name);
      passed.assign(reports.size(), 0);
    }
    for (std::size_t i = 0; i < reports.size(); ++i) {
      passed[i] += reports[i].pass;
    }
  }
  bool all = true;
  std::size_t ok = 0;
  for (std::size_t i = 0; i < names.size(); ++i) {
    const ProportionResult pr = proportion_check(passed[i], streams, alpha);
    print_report_line(names[i], pr.proportion, pr.pass);
    all = all && pr.pass;
    ok += pr.pass;
  }
  const ProportionResult any = proportion_check(0, streams, alpha);
  std::printf("summary\t%zu/%zu\t%s\t(threshold %.4f, %zu streams)\n", ok,
              names.size(), all ? "PASS" : "FAIL", any.threshold, streams);
  if (!all) throw StatError("proportion check failed");
  return 0;
}

BitString generate_ciphertext_bits(const CurvePtr& curve, EncodingKind kind,
                                   std::size_t total_bits,
                                   std::size_t message_bytes,
                                   PaddingPolicy policy, Rng& rng) {
  const KeyPair keys = keygen(curve, kind, 2, rng);
  Bytes stream;
  stream.reserve(total_bits / 8 + message_bytes + 64);
  while (stream.size() * 8 < total_bits) {
    const Bytes message = rng.bytes(message_bytes);
    const Ciphertext ct = encrypt(keys.pub, message, rng, policy);
    const Bytes wire = ciphertext_to_bytes(ct);
    stream.insert(stream.end(), wire.begin(), wire.end());
  }
  return BitString::from_bytes(stream).slice(0, total_bits);
}

// Exhaustive toy-curve agreement run: forward tables, inverse completeness,
// preimage-count histograms by two code paths, and a sampler chi-square.
int run_selftest(Rng& rng) {
  struct Combo {
    const char* curve;
    EncodingKind kind;
  };
  const Combo combos[] = {{"toy-1019", EncodingKind::kIcart},
                          {"toy-1019", EncodingKind::kSWU},
                          {"toy-1039", EncodingKind::kSW}};
  std::size_t checks = 0;
  for (const Combo& combo : combos) {
    const CurvePtr curve = registry_get(combo.curve);
    const std::string label =
        std::string(combo.curve) + "/" + encoding_name(combo.kind);
    const ToyGroup group = ToyGroup::build(curve);
    const PreimageTable table(group, combo.kind);

    mpz_class covered = 0;
    for (const auto& bucket : table.buckets()) covered += bucket.size();
    if (covered != curve->p()) {
      throw InternalError(label + ": forward map is not total");
    }
    if (table.max_finite_preimages() > 4) {
      throw InternalError(label + ": more than 4 preimages at a point");
    }
    std::printf("ok\t%s\tforward table total, arity <= 4\n", label.c_str());
    ++checks;

    for (std::size_t i = 0; i < group.order(); ++i) {
      const PreimageSlots slots =
          preimages(combo.kind, *curve, group.point(i), rng);
      std::vector<mpz_class> found;
      for (const auto& slot : slots) {
        if (slot) found.push_back(slot->residue());
      }
      std::sort(found.begin(), found.end());
      const std::vector<mpz_class> expected =
          i == 0 ? std::vector<mpz_class>{} : table.buckets()[i];
      if (found != expected) {
        throw InternalError(label + ": inverse disagrees with enumeration");
      }
    }
    std::printf("ok\t%s\tinverse complete at all %zu points\n", label.c_str(),
                group.order());
    ++checks;

    const auto histogram = ns_histogram(group, table, 2);
    mpz_class total = 0;
    mpz_class min_count = -1;
    for (const auto& h : histogram) {
      total += h;
      if (min_count < 0 || h < min_count) min_count = h;
    }
    if (total != curve->p() * curve->p()) {
      throw InternalError(label + ": histogram mass is not p^2");
    }
    if (min_count <= 0) {
      throw InternalError(label + ": a point is missed by the pair encoding");
    }
    const mpq_class dist = histogram_distance(histogram);
    const mpq_class dist2 =
        regularity_distance(TensorEncoding(combo.kind, curve, 2));
    if (dist != dist2) {
      throw InternalError(label + ": distance code paths disagree");
    }
    std::printf("ok\t%s\tpair coverage full, distance %.6f (exact match)\n",
                label.c_str(), dist.get_d());
    ++checks;

    const CurvePoint target =
        group.point(1 + rng.below_u64(group.order() - 1));
    const auto p_value = sampler_chisquare(group, table, combo.kind, target,
                                           20000, SamplerVariant::kUniform, rng);
    if (!p_value) {
      throw InternalError(label + ": chi-square preconditions not met");
    }
    if (*p_value <= 0.001) {
      throw StatError(label + ": sampler uniformity rejected, p=" +
                      std::to_string(*p_value));
    }
    std::printf("ok\t%s\tsampler chi-square p=%.4f\n", label.c_str(),
                *p_value);
    ++checks;
  }
  std::printf("summary\t%zu/%zu\tPASS\n", checks, checks);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Provably secure public-key steganography over elliptic curves"};
  app.require_subcommand(1);

  std::string curve_name = "p256";
  std::string encoding = "swu";
  std::string t_policy = "k8";
  std::string pk_path;
  std::string sk_path;
  std::string in_path;
  std::string out_path;
  std::string channel_path;
  std::string codec_name = "rejection";
  std::string pk_out = "ecstego.pk";
  std::string sk_out = "ecstego.sk";
  std::size_t arity = 2;
  std::uint64_t seed = 0;
  bool insecure = false;
  bool generate = false;
  std::size_t bits_wanted = 1000000;
  std::size_t message_bytes = 64;
  std::size_t streams = 100;
  double alpha = 0.01;

  const auto add_seed = [&](CLI::App* sub) {
    sub->add_option("--seed", seed,
                    "deterministic rng seed (testing only)");
    sub->add_flag("--insecure-deterministic", insecure,
                  "confirm that predictable randomness is intended");
  };
  const auto add_policy = [&](CLI::App* sub) {
    sub->add_option("--t-policy", t_policy,
                    "rerandomization width: k8 (t=max(8,k/8)) or k4 (t=k/4)")
        ->check(CLI::IsMember({"k8", "k4"}));
  };

  CLI::App* keygen_cmd =
      app.add_subcommand("keygen", "generate a key pair for curve+encoding");
  keygen_cmd->add_option("--curve", curve_name, "curve name")->required();
  keygen_cmd->add_option("--encoding", encoding, "icart, sw, or swu")
      ->required();
  keygen_cmd->add_option("--s", arity, "tensor arity (default 2)");
  keygen_cmd->add_option("--pk-out", pk_out, "public key output path");
  keygen_cmd->add_option("--sk-out", sk_out, "secret key output path");
  add_seed(keygen_cmd);

  CLI::App* encrypt_cmd =
      app.add_subcommand("encrypt", "encrypt a file to the raw wire format");
  encrypt_cmd->add_option("--pk", pk_path, "public key file")->required();
  encrypt_cmd->add_option("--in", in_path, "plaintext file")->required();
  encrypt_cmd->add_option("--out", out_path, "ciphertext file")->required();
  add_policy(encrypt_cmd);
  add_seed(encrypt_cmd);

  CLI::App* decrypt_cmd =
      app.add_subcommand("decrypt", "decrypt a raw wire-format file");
  decrypt_cmd->add_option("--sk", sk_path, "secret key file")->required();
  decrypt_cmd->add_option("--in", in_path, "ciphertext file")->required();
  decrypt_cmd->add_option("--out", out_path, "plaintext output")->required();
  add_policy(decrypt_cmd);

  CLI::App* embed_cmd =
      app.add_subcommand("embed", "encrypt and hide a file in channel tokens");
  embed_cmd->add_option("--pk", pk_path, "public key file")->required();
  embed_cmd->add_option("--channel", channel_path, "channel model file")
      ->required();
  embed_cmd->add_option("--in", in_path, "plaintext file")->required();
  embed_cmd->add_option("--out", out_path, "stegotext output")->required();
  embed_cmd->add_option("--codec", codec_name, "uniform or rejection")
      ->check(CLI::IsMember({"uniform", "rejection"}));
  add_policy(embed_cmd);
  add_seed(embed_cmd);

  CLI::App* extract_cmd =
      app.add_subcommand("extract", "recover a file hidden in channel tokens");
  extract_cmd->add_option("--sk", sk_path, "secret key file")->required();
  extract_cmd->add_option("--channel", channel_path, "channel model file")
      ->required();
  extract_cmd->add_option("--in", in_path, "stegotext file")->required();
  extract_cmd->add_option("--out", out_path, "plaintext output")->required();
  extract_cmd->add_option("--codec", codec_name, "uniform or rejection")
      ->check(CLI::IsMember({"uniform", "rejection"}));
  add_policy(extract_cmd);

  CLI::App* randtest_cmd = app.add_subcommand(
      "randtest", "run the SP 800-22 subset on a file or fresh ciphertext");
  randtest_cmd->add_option("--in", in_path, "bit source file (raw bytes)");
  randtest_cmd->add_flag("--generate", generate,
                         "test freshly generated ciphertext instead");
  randtest_cmd->add_option("--curve", curve_name, "curve for --generate");
  randtest_cmd->add_option("--encoding", encoding, "encoding for --generate");
  randtest_cmd->add_option("--bits", bits_wanted,
                           "total bits to test (default 1000000)");
  randtest_cmd->add_option("--message-bytes", message_bytes,
                           "plaintext size per generated message");
  randtest_cmd->add_option("--streams", streams,
                           "split into this many streams (default 100)");
  randtest_cmd->add_option("--alpha", alpha, "significance level");
  add_policy(randtest_cmd);
  add_seed(randtest_cmd);

  CLI::App* selftest_cmd = app.add_subcommand(
      "selftest", "exhaustive toy-curve agreement checks and sampler audit");
  add_seed(selftest_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    CLI::App* active = app.get_subcommands().at(0);
    const bool seed_given = active->get_option_no_throw("--seed") != nullptr &&
                            active->count("--seed") > 0;
    if (seed_given && !insecure) {
      std::fprintf(stderr,
                   "--seed produces predictable keys; pass "
                   "--insecure-deterministic to confirm\n");
      return 1;
    }
    if (keygen_cmd->parsed()) {
      auto rng = make_rng(seed_given, seed);
      const CurvePtr curve = registry_get(curve_name);
      const KeyPair keys =
          keygen(curve, encoding_from_name(encoding), arity, *rng);
      write_key_files(keys, pk_out, sk_out);
      std::printf("pk fingerprint: %s\n", fingerprint(keys.pub).c_str());
    } else if (encrypt_cmd->parsed()) {
      auto rng = make_rng(seed_given, seed);
      const PublicKey pub = read_public_key(pk_path);
      const Bytes message = read_file_bytes(in_path);
      const Ciphertext ct =
          encrypt(pub, message, *rng, policy_from_name(t_policy));
      write_file_bytes(out_path, ciphertext_to_bytes(ct));
    } else if (decrypt_cmd->parsed()) {
      const KeyPair keys = read_secret_key(sk_path);
      const Bytes wire = read_file_bytes(in_path);
      const BiasParams bias =
          default_bias_params(*keys.pub.curve, policy_from_name(t_policy));
      const Ciphertext ct =
          ciphertext_from_bytes(wire, *keys.pub.curve, keys.pub.s, bias);
      std::fprintf(stderr, "%s\n", kNoIntegrityNote);
      write_file_bytes(out_path,
                       decrypt(keys, ct, policy_from_name(t_policy)));
    } else if (embed_cmd->parsed()) {
      auto rng = make_rng(seed_given, seed);
      const PublicKey pub = read_public_key(pk_path);
      const ChannelModel channel = ChannelModel::load_file(channel_path);
      const auto codec = make_codec(codec_name);
      const Stegotext cover =
          stego_encode(pub, read_file_bytes(in_path), channel, *codec, *rng,
                       policy_from_name(t_policy));
      write_file_text(out_path, cover.to_text());
    } else if (extract_cmd->parsed()) {
      const KeyPair keys = read_secret_key(sk_path);
      const ChannelModel channel = ChannelModel::load_file(channel_path);
      const auto codec = make_codec(codec_name);
      const Stegotext cover = Stegotext::from_text(read_file_text(in_path));
      std::fprintf(stderr, "%s\n", kNoIntegrityNote);
      write_file_bytes(out_path, stego_decode(keys, cover, channel, *codec,
                                              policy_from_name(t_policy)));
    } else if (randtest_cmd->parsed()) {
      BitString bits;
      if (generate) {
        auto rng = make_rng(seed_given, seed);
        bits = generate_ciphertext_bits(
            registry_get(curve_name), encoding_from_name(encoding),
            bits_wanted, message_bytes, policy_from_name(t_policy), *rng);
      } else if (!in_path.empty()) {
        bits = BitString::from_bytes(read_file_bytes(in_path));
      } else {
        std::fprintf(stderr, "randtest needs --in or --generate\n");
        return 1;
      }
      return run_randtest_streams(bits, streams, alpha);
    } else if (selftest_cmd->parsed()) {
      auto rng = make_rng(seed_given, seed);
      return run_selftest(*rng);
    }
    return 0;
  } catch (const StatError& e) {
    std::fprintf(stderr, "statistical failure: %s\n", e.what());
    return 3;
  } catch (const FormatError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const DomainError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 2;
  }
}
