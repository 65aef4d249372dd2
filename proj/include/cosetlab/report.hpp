#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "json.hpp"

#include "cosetlab/code.hpp"
#include "cosetlab/errors.hpp"
#include "cosetlab/ideal.hpp"
#include "cosetlab/leaders.hpp"
#include "cosetlab/verify.hpp"

namespace cosetlab {

enum class Format { Json, Csv, Text };

/// "json", "csv" or "text". Throws std::invalid_argument otherwise.
Format parse_format(std::string_view name);

struct RenderOptions {
    Format format = Format::Json;
    /// Words as coefficient strings instead of packed integers.
    bool pretty = false;
};

struct CodeInfo {
    std::size_t n = 0, k = 0;
    unsigned q = 0, p = 0, m = 0;
    std::size_t d = 0, t = 0, rho = 0;
    std::uint64_t codewords = 0;
};

/// rho comes from the ideal table, d from codeword enumeration.
CodeInfo describe_code(const LinearCode& code, const IdealRegistry& reg, const EnumerationCaps& caps = {});

nlohmann::json word_json(const Word& w, bool pretty = false);
/// Comma separated packed entries, the form accepted by `decode --word`.
std::string word_csv(const Word& w);
/// Parses comma separated packed entries. Throws std::invalid_argument.
Word parse_word(const Field& field, std::size_t n, std::string_view text);

std::string render_info(const CodeInfo& info, const RenderOptions& opt);
std::string render_coset_leaders(const IdealRegistry& reg, const RenderOptions& opt, bool audit = false);
std::string render_leaders(const CodeInfo& info, const LeaderSet& leaders, bool test_set, const RenderOptions& opt);
std::string render_errors(const ErrorClassification& cls, const std::vector<Word>& trial, const TrialSetReport& checks,
                          const RenderOptions& opt);
std::string render_decode(const DecodeResult& result, const RenderOptions& opt);
std::string render_verify(const VerificationReport& report, const RenderOptions& opt);

}  // namespace cosetlab
