#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cci {

/// Base class for all data/validation errors raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input line; carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Cross-reference or invariant violation; carries the offending id.
class ValidationError : public Error {
 public:
  ValidationError(std::string id, const std::string& what)
      : Error(id + ": " + what), id_(std::move(id)) {}
  const std::string& id() const { return id_; }

 private:
  std::string id_;
};

// Collapses whitespace runs to single spaces and trims both ends.
std::string normalize_whitespace(std::string_view text);

// ASCII lowercase copy; bytes >= 0x80 pass through untouched.
std::string ascii_lower(std::string_view text);

std::string sha256_hex(std::string_view data);

// Writes via a temp file in the same directory plus rename, so a crash or
// error never leaves a partial file at `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

// Runs fn(i) for i in [0, n). Iterations must be independent; with
// workers > 1 they are sharded over threads. Exceptions propagate.
void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& fn);

}  // namespace cci
