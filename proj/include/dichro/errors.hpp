#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace dichro {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An enumeration or DP would exceed its configured cap.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what_budget, std::size_t requested, std::size_t cap)
      : Error(what_budget + " budget exceeded: " + std::to_string(requested) + " > " +
              std::to_string(cap)),
        requested_(requested),
        cap_(cap) {}

  std::size_t requested() const noexcept { return requested_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t requested_;
  std::size_t cap_;
};

/// Caller passed arguments outside an operation's domain.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed input text. `line` and `column` are 1-based; 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t line = 0, std::size_t column = 0)
      : Error(line ? "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                         msg
                   : msg),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Rejection sampling gave up.
class TriesExhausted : public Error {
 public:
  TriesExhausted(const std::string& msg, std::size_t tries) : Error(msg), tries_(tries) {}
  std::size_t tries() const noexcept { return tries_; }

 private:
  std::size_t tries_;
};

/// A structured list of hypotheses that do not hold for the requested run.
class HypothesesNotMet : public Error {
 public:
  explicit HypothesesNotMet(std::vector<std::string> failed)
      : Error(join(failed)), failed_(std::move(failed)) {}

  const std::vector<std::string>& failed() const noexcept { return failed_; }

 private:
  static std::string join(const std::vector<std::string>& items) {
    std::string out = "hypotheses not met:";
    for (const auto& s : items) out += " [" + s + "]";
    return out;
  }

  std::vector<std::string> failed_;
};

}  // namespace dichro
