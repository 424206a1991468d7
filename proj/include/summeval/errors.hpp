#pragma once

#include <stdexcept>
#include <string>

namespace summeval {

/// Base class for all toolkit errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Corpus or index construction failed (duplicate ids, malformed input).
struct indexing_error : error {
    using error::error;
};

/// Persisted index has an unknown layout or format version.
struct unsupported_format_error : error {
    using error::error;
};

/// Persisted index failed checksum or invariant validation.
struct integrity_error : error {
    using error::error;
};

/// Query was produced with analyzer options different from the index.
struct fingerprint_mismatch_error : error {
    using error::error;
};

/// Query reformulation produced no terms.
struct empty_query_error : error {
    using error::error;
};

/// Referenced entity (document, nugget) does not exist.
struct not_found_error : error {
    using error::error;
};

/// Correlation is undefined for the given inputs (constant vector).
struct undefined_correlation_error : error {
    using error::error;
};

}  // namespace summeval
