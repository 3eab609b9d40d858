#pragma once

#include <string>

#include <json.hpp>

#include "fsaut/automorphism.hpp"
#include "fsaut/factorization.hpp"
#include "fsaut/word.hpp"

namespace fsaut {

/// Key order follows insertion so that serialized certificates are byte-stable.
using Json = nlohmann::ordered_json;

/// [[index, sign], ...]
Json to_json(const Word& w);
Json to_json(const WordTuple& t);
/// { "support": N, "images": [word, ...] }
Json to_json(const FinSuppAut& phi);
/// { "n", "phi", "m", "mprime", "psi", "u", "v", "pairs": [[F, U] x 3] }
Json to_json(const Certificate& c);
Json to_json(const VerificationReport& r);

/// The from_json family throws ParseError on malformed structure and the
/// usual validation errors on invalid content.
Word word_from_json(const Json& j);
WordTuple tuple_from_json(const Json& j);
FinSuppAut aut_from_json(const Json& j);
/// Structural parse only: verification is verify_certificate's job.
Certificate certificate_from_json(const Json& j);

/// Serialized text with a trailing newline.
std::string dump(const Json& j);
/// Throws ParseError on invalid JSON text.
Json parse_json(const std::string& text);

}  // namespace fsaut
