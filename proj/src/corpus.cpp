#include "arasent/corpus.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "arasent/errors.hpp"
#include "arasent/utf8.hpp"

namespace arasent {

using ordered_json = nlohmann::ordered_json;

std::string to_string(Source s) {
  switch (s) {
    case Source::review: return "review";
    case Source::facebook: return "facebook";
    case Source::twitter: return "twitter";
  }
  return "review";
}

std::string to_string(Label l) {
  switch (l) {
    case Label::positive: return "positive";
    case Label::negative: return "negative";
    case Label::neutral: return "neutral";
    case Label::unlabeled: return "unlabeled";
  }
  return "unlabeled";
}

Source source_from_string(std::string_view s) {
  if (s == "review") return Source::review;
  if (s == "facebook") return Source::facebook;
  if (s == "twitter") return Source::twitter;
  throw DataError("unknown source: " + std::string(s));
}

Label label_from_string(std::string_view s) {
  if (s == "positive") return Label::positive;
  if (s == "negative") return Label::negative;
  if (s == "neutral") return Label::neutral;
  if (s == "unlabeled") return Label::unlabeled;
  throw DataError("unknown label: " + std::string(s));
}

std::string FilterReport::to_csv() const {
  std::ostringstream out;
  out << "stage,survivors\n";
  out << "initial," << initial_count << "\n";
  for (const auto& [name, count] : stages) out << name << "," << count << "\n";
  return out.str();
}

namespace {

RawPost parse_raw_post(const ordered_json& j, Source default_source) {
  RawPost post;
  if (!j.is_object()) throw DataError("record is not a JSON object");
  if (!j.contains("id") || !j.at("id").is_string())
    throw DataError("missing string field \"id\"");
  post.id = j.at("id").get<std::string>();
  if (j.contains("source"))
    post.source = source_from_string(j.at("source").get<std::string>());
  else
    post.source = default_source;
  if (!j.contains("text") || !j.at("text").is_string())
    throw DataError("missing string field \"text\"");
  post.text = j.at("text").get<std::string>();
  if (j.contains("has_photo_only")) post.has_photo_only = j.at("has_photo_only").get<bool>();
  if (j.contains("rating")) {
    if (post.source != Source::review)
      throw DataError("field \"rating\" is only valid for source \"review\"");
    const int rating = j.at("rating").get<int>();
    if (rating < 1 || rating > 10)
      throw DataError("rating out of range 1..10: " + std::to_string(rating));
    post.rating = rating;
  }
  if (j.contains("label")) post.label = label_from_string(j.at("label").get<std::string>());
  return post;
}

}  // namespace

IngestResult ingest(const std::filesystem::path& path, Source default_source) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open corpus file: " + path.string());

  IngestResult result;
  std::set<std::string> seen_ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!utf8::valid(line)) {
      result.diagnostics.push_back(path.string() + ":" + std::to_string(line_no) +
                                   ": invalid UTF-8");
      continue;
    }
    try {
      RawPost post = parse_raw_post(ordered_json::parse(line), default_source);
      if (!seen_ids.insert(post.id).second)
        throw DataError(path.string() + ":" + std::to_string(line_no) +
                        ": duplicate id \"" + post.id + "\"");
      result.posts.push_back(std::move(post));
    } catch (const DataError& e) {
      if (std::string(e.what()).find("duplicate id") != std::string::npos) throw;
      result.diagnostics.push_back(path.string() + ":" + std::to_string(line_no) + ": " +
                                   e.what());
    } catch (const std::exception& e) {
      result.diagnostics.push_back(path.string() + ":" + std::to_string(line_no) + ": " +
                                   e.what());
    }
  }
  return result;
}

std::string raw_posts_to_jsonl(const std::vector<RawPost>& posts) {
  std::ostringstream out;
  for (const RawPost& p : posts) {
    ordered_json j;
    j["id"] = p.id;
    j["source"] = std::string(to_string(p.source));
    j["text"] = p.text;
    if (p.has_photo_only) j["has_photo_only"] = true;
    if (p.rating) j["rating"] = *p.rating;
    if (p.label != Label::unlabeled) j["label"] = std::string(to_string(p.label));
    out << j.dump() << "\n";
  }
  return out.str();
}

std::string documents_to_jsonl(const std::vector<Document>& docs) {
  std::ostringstream out;
  for (const Document& d : docs) {
    ordered_json j;
    j["id"] = d.id;
    j["source"] = std::string(to_string(d.source));
    j["raw_text"] = d.raw_text;
    j["clean_text"] = d.clean_text;
    ordered_json tokens = ordered_json::array();
    for (const Token& t : d.tokens)
      tokens.push_back({t.text, std::string(to_string(t.kind))});
    j["tokens"] = std::move(tokens);
    j["label"] = std::string(to_string(d.label));
    out << j.dump() << "\n";
  }
  return out.str();
}

std::vector<Document> documents_from_jsonl(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open corpus file: " + path.string());
  std::vector<Document> docs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      const ordered_json j = ordered_json::parse(line);
      Document d;
      d.id = j.at("id").get<std::string>();
      d.source = source_from_string(j.at("source").get<std::string>());
      d.raw_text = j.at("raw_text").get<std::string>();
      d.clean_text = j.at("clean_text").get<std::string>();
      for (const auto& t : j.at("tokens"))
        d.tokens.push_back({t.at(0).get<std::string>(),
                            token_kind_from_string(t.at(1).get<std::string>())});
      d.label = label_from_string(j.at("label").get<std::string>());
      docs.push_back(std::move(d));
    } catch (const std::exception& e) {
      throw DataError(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return docs;
}

}  // namespace arasent
