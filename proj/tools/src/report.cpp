#include "errold_cli/report.hpp"

#include <openssl/evp.h>

#include <array>
#include <fstream>
#include <iterator>
#include <ostream>
#include <stdexcept>

namespace errold::cli {

void Report::write(std::ostream& out) const {
  static constexpr const char* kNames[] = {"ok", "fail", "error"};
  out << "command: " << command_ << '\n';
  out << "status: " << kNames[static_cast<int>(status_)] << '\n';
  for (const auto& [key, value] : fields_) out << key << ": " << value << '\n';
}

std::string text_sha256(const std::string& text) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int size = 0;
  if (EVP_Digest(text.data(), text.size(), digest.data(), &size, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < size; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 15];
  }
  return out;
}

std::string file_sha256(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("file-not-found: " + path);
  const std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return text_sha256(bytes);
}

}  // namespace errold::cli
