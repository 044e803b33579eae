#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arasent/textkit.hpp"

namespace arasent {

enum class Source { review, facebook, twitter };
enum class Label { positive, negative, neutral, unlabeled };

std::string to_string(Source s);
std::string to_string(Label l);
Source source_from_string(std::string_view s);
Label label_from_string(std::string_view s);

struct RawPost {
  std::string id;
  Source source = Source::review;
  std::string text;
  bool has_photo_only = false;
  std::optional<int> rating;  // reviews only, 1..10
  Label label = Label::unlabeled;
};

struct Document {
  std::string id;
  Source source = Source::review;
  std::string raw_text;
  std::string clean_text;
  std::vector<Token> tokens;
  Label label = Label::unlabeled;
};

// Survivor counts after each filter stage of the preparation pipeline.
struct FilterReport {
  std::size_t initial_count = 0;
  std::vector<std::pair<std::string, std::size_t>> stages;

  std::size_t final_count() const {
    return stages.empty() ? initial_count : stages.back().second;
  }
  std::string to_csv() const;
};

struct IngestResult {
  std::vector<RawPost> posts;
  std::vector<std::string> diagnostics;  // one entry per malformed line
};

// Line-delimited JSON records. Malformed lines become diagnostics naming the
// line number; unreadable files and duplicate ids are fatal. `default_source`
// fills records that lack a "source" field.
IngestResult ingest(const std::filesystem::path& path, Source default_source);

std::string raw_posts_to_jsonl(const std::vector<RawPost>& posts);

std::string documents_to_jsonl(const std::vector<Document>& docs);
std::vector<Document> documents_from_jsonl(const std::filesystem::path& path);

}  // namespace arasent
