#pragma once

#include <stdexcept>
#include <string>

namespace formant {

// Base for all toolkit errors. Each subclass corresponds to one failure
// mode named in the module contracts.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MalformedRow : Error {
    explicit MalformedRow(std::size_t line)
        : Error("malformed row at line " + std::to_string(line)), line(line) {}
    std::size_t line;
};

struct NonMonotonicFormants : Error {
    explicit NonMonotonicFormants(std::size_t line)
        : Error("non-monotonic formants at line " + std::to_string(line)), line(line) {}
    std::size_t line;
};

struct UnknownVowelCode : Error {
    UnknownVowelCode(std::size_t line, const std::string& code)
        : Error("unknown vowel code '" + code + "' at line " + std::to_string(line)),
          line(line) {}
    std::size_t line;
};

struct EmptyResult : Error {
    explicit EmptyResult(const std::string& what_arg) : Error(what_arg) {}
};

struct UnpairedUtterance : Error {
    UnpairedUtterance(int speaker, const std::string& vowel)
        : Error("speaker " + std::to_string(speaker) + " vowel " + vowel +
                " does not have exactly two repetitions"),
          speaker(speaker) {}
    int speaker;
};

struct InsufficientSamples : Error {
    explicit InsufficientSamples(const std::string& what_arg) : Error(what_arg) {}
};

struct ZeroVariance : Error {
    explicit ZeroVariance(const std::string& what_arg) : Error(what_arg) {}
};

struct MissingVowel : Error {
    explicit MissingVowel(const std::string& vowel)
        : Error("no statistics for vowel " + vowel) {}
};

struct MissingCorner : Error {
    explicit MissingCorner(const std::string& vowel)
        : Error("missing corner vowel " + vowel) {}
};

struct UnknownSpeaker : Error {
    explicit UnknownSpeaker(int speaker)
        : Error("no statistics for speaker " + std::to_string(speaker)), speaker(speaker) {}
    int speaker;
};

struct NegativeFrequency : Error {
    explicit NegativeFrequency(double value)
        : Error("frequency must be nonnegative, got " + std::to_string(value)) {}
};

struct IOFailure : Error {
    explicit IOFailure(const std::string& what_arg) : Error(what_arg) {}
};

}  // namespace formant
