#pragma once

// Run manifests: a JSON sidecar next to each output file recording what
// produced it. Requires OpenSSL (libcrypto) for the digests.

#include <cstddef>
#include <map>
#include <string>
#include <string_view>

#include <openssl/evp.h>

#include "sdcode/errors.hpp"
#include "sdcode/io.hpp"

namespace sdcode {

inline std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw InternalError("SHA-256 digest failed");
  }
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

struct RunManifest {
  std::string command;
  json parameters = json::object();
  std::map<std::string, std::string> input_digests;
  std::size_t threads = 0;
  double wall_seconds = 0;
  std::map<std::string, std::string> output_digests;

  void add_input(const std::string& label, std::string_view content) { input_digests[label] = sha256_hex(content); }
  void add_output(const std::string& label, std::string_view content) { output_digests[label] = sha256_hex(content); }

  json to_json() const {
    return json{{"command", command},          {"parameters", parameters},
                {"input_digests", input_digests}, {"threads", threads},
                {"wall_seconds", wall_seconds},   {"output_digests", output_digests}};
  }
};

inline std::string manifest_path(const std::string& output_path) { return output_path + ".manifest.json"; }

inline void write_manifest(const std::string& output_path, const RunManifest& m) {
  write_text(manifest_path(output_path), m.to_json().dump(1) + "\n");
}

}  // namespace sdcode
