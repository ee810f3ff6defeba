#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace equisumm {

// Base class for every recoverable failure raised by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

class IoError : public Error {
public:
  using Error::Error;
};

// A record that cannot be parsed in the declared input format.
class MalformedRecordError : public Error {
public:
  MalformedRecordError(std::size_t row, const std::string& reason)
      : Error("malformed record at row " + std::to_string(row) + ": " + reason),
        row_(row) {}
  std::size_t row() const noexcept { return row_; }

private:
  std::size_t row_;
};

class EmptyCorpusError : public Error {
public:
  using Error::Error;
};

class MissingFieldError : public Error {
public:
  using Error::Error;
};

// A term listed on both the male and the female side of a lexicon.
class OverlappingEntryError : public Error {
public:
  explicit OverlappingEntryError(std::vector<std::string> terms)
      : Error(describe(terms)), terms_(std::move(terms)) {}
  const std::vector<std::string>& terms() const noexcept { return terms_; }

private:
  static std::string describe(const std::vector<std::string>& terms) {
    std::string msg = "lexicon entries present on both sides:";
    for (const auto& t : terms) msg += " '" + t + "'";
    return msg;
  }
  std::vector<std::string> terms_;
};

class EmptyLexiconError : public Error {
public:
  using Error::Error;
};

class ZeroVectorError : public Error {
public:
  using Error::Error;
};

class DimensionMismatchError : public Error {
public:
  using Error::Error;
};

class ServiceUnavailableError : public Error {
public:
  using Error::Error;
};

class EmptySeedSetError : public Error {
public:
  using Error::Error;
};

class NoSeedClustersError : public Error {
public:
  using Error::Error;
};

class ConfigError : public Error {
public:
  using Error::Error;
};

}  // namespace equisumm
