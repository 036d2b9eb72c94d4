#include "medalforge/corpus_io.hpp"

#include <charconv>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

#include "medalforge/errors.hpp"

namespace medalforge {

namespace {

constexpr size_t kFlushThreshold = 1 << 20;

void append_csv_field(std::string& out, std::string_view field) {
    bool needs_quotes = field.find_first_of(",\"\r\n") != std::string_view::npos;
    if (!needs_quotes) {
        out.append(field);
        return;
    }
    out.push_back('"');
    for (char c : field) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
}

void append_u64(std::string& out, uint64_t v) {
    char buf[24];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    out.append(buf, ptr - buf);
}

void append_i64(std::string& out, int64_t v) {
    char buf[24];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    out.append(buf, ptr - buf);
}

}  // namespace

void json_escape_append(std::string& out, std::string_view s) {
    for (unsigned char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            case '\b': out += "\\b"; break;
            case '\f': out += "\\f"; break;
            default:
                if (c < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out.push_back(static_cast<char>(c));
                }
        }
    }
}

const char* note_category_name(NoteCategory c) {
    switch (c) {
        case NoteCategory::physician: return "physician";
        case NoteCategory::nursing: return "nursing";
        default: return "other";
    }
}

NoteCategory note_category_from(std::string_view name) {
    if (name == "physician") return NoteCategory::physician;
    if (name == "nursing") return NoteCategory::nursing;
    return NoteCategory::other;
}

CorpusFormat corpus_format_from(std::string_view name) {
    if (name == "jsonl") return CorpusFormat::jsonl;
    if (name == "plain") return CorpusFormat::plain;
    throw std::invalid_argument("unknown corpus format: " + std::string(name));
}

SampleFormat sample_format_from(std::string_view name) {
    if (name == "jsonl") return SampleFormat::jsonl;
    if (name == "csv") return SampleFormat::csv;
    throw std::invalid_argument("unknown sample format: " + std::string(name));
}

SampleFormat sample_format_for_path(const std::string& path) {
    if (path.size() >= 6 && path.substr(path.size() - 6) == ".jsonl") return SampleFormat::jsonl;
    return SampleFormat::csv;
}

// --- DocumentReader -------------------------------------------------------

DocumentReader::DocumentReader(const std::string& path, CorpusFormat format)
    : in_(path, std::ios::binary), path_(path), format_(format) {
    if (!in_) throw DataError("cannot open corpus file: " + path);
}

std::optional<Document> DocumentReader::next() {
    while (std::getline(in_, line_)) {
        ++line_no_;
        if (!line_.empty() && line_.back() == '\r') line_.pop_back();
        if (format_ == CorpusFormat::plain) {
            Document doc;
            doc.ordinal = next_ordinal_++;
            doc.id = "line-" + std::to_string(doc.ordinal);
            doc.text = line_;
            return doc;
        }
        nlohmann::json j = nlohmann::json::parse(line_, nullptr, false);
        if (j.is_discarded() || !j.is_object() || !j.contains("id") || !j.contains("text") ||
            !j["text"].is_string()) {
            ++warnings_;
            continue;
        }
        Document doc;
        if (j["id"].is_string()) {
            doc.id = j["id"].get<std::string>();
        } else if (j["id"].is_number_integer()) {
            doc.id = std::to_string(j["id"].get<int64_t>());
        } else {
            ++warnings_;
            continue;
        }
        doc.ordinal = next_ordinal_++;
        doc.text = j["text"].get<std::string>();
        return doc;
    }
    return std::nullopt;
}

// --- SampleWriter ---------------------------------------------------------

SampleWriter::SampleWriter(const std::string& path, SampleFormat format)
    : out_(path, std::ios::binary), path_(path), format_(format) {
    if (!out_) throw DataError("cannot open output file for writing: " + path);
    if (format_ == SampleFormat::csv) buf_ = "TEXT,LOCATION,LABEL,ABBREV,DOC_ID\n";
}

SampleWriter::~SampleWriter() {
    try {
        close();
    } catch (...) {
        // Destructor stays silent; call close() to observe failures.
    }
}

void SampleWriter::write(const AbbrevSample& sample) {
    if (format_ == SampleFormat::csv) {
        append_csv_field(buf_, sample.text);
        buf_.push_back(',');
        append_u64(buf_, sample.location);
        buf_.push_back(',');
        append_csv_field(buf_, sample.label);
        buf_.push_back(',');
        append_csv_field(buf_, sample.abbreviation);
        buf_.push_back(',');
        append_csv_field(buf_, sample.doc_id);
        buf_.push_back('\n');
    } else {
        buf_ += "{\"text\":\"";
        json_escape_append(buf_, sample.text);
        buf_ += "\",\"location\":";
        append_u64(buf_, sample.location);
        buf_ += ",\"label\":\"";
        json_escape_append(buf_, sample.label);
        buf_ += "\",\"abbrev\":\"";
        json_escape_append(buf_, sample.abbreviation);
        buf_ += "\",\"doc_id\":\"";
        json_escape_append(buf_, sample.doc_id);
        buf_ += "\"}\n";
    }
    ++count_;
    if (buf_.size() >= kFlushThreshold) flush_buffer();
}

void SampleWriter::flush_buffer() {
    out_.write(buf_.data(), static_cast<std::streamsize>(buf_.size()));
    buf_.clear();
}

void SampleWriter::close() {
    if (closed_) return;
    closed_ = true;
    flush_buffer();
    out_.flush();
    if (!out_) {
        throw DataError("write failed; partial file left at " + path_ +
                        " (remove it before retrying)");
    }
    out_.close();
}

// --- SampleReader ---------------------------------------------------------

SampleReader::SampleReader(const std::string& path, SampleFormat format)
    : in_(path, std::ios::binary), path_(path), format_(format) {
    if (!in_) throw DataError("cannot open samples file: " + path);
}

// RFC 4180 record reader; fields may contain quoted commas and newlines.
bool SampleReader::next_csv_record(std::vector<std::string>& fields) {
    fields.clear();
    int c = in_.get();
    if (c == EOF) return false;
    std::string field;
    bool in_quotes = false;
    while (true) {
        if (c == EOF) {
            fields.push_back(std::move(field));
            return true;
        }
        char ch = static_cast<char>(c);
        if (in_quotes) {
            if (ch == '"') {
                int peek = in_.peek();
                if (peek == '"') {
                    in_.get();
                    field.push_back('"');
                } else {
                    in_quotes = false;
                }
            } else {
                field.push_back(ch);
            }
        } else if (ch == '"' && field.empty()) {
            in_quotes = true;
        } else if (ch == ',') {
            fields.push_back(std::move(field));
            field.clear();
        } else if (ch == '\n') {
            if (!field.empty() && field.back() == '\r') field.pop_back();
            fields.push_back(std::move(field));
            return true;
        } else {
            field.push_back(ch);
        }
        c = in_.get();
    }
}

std::optional<AbbrevSample> SampleReader::next() {
    if (format_ == SampleFormat::csv) {
        std::vector<std::string> fields;
        if (!header_done_) {
            header_done_ = true;
            if (!next_csv_record(fields)) return std::nullopt;  // empty file
        }
        while (next_csv_record(fields)) {
            ++line_no_;
            if (fields.size() == 1 && fields[0].empty()) continue;  // blank line
            if (fields.size() != 5) {
                ++warnings_;
                continue;
            }
            AbbrevSample s;
            s.text = std::move(fields[0]);
            const std::string& loc = fields[1];
            uint64_t location = 0;
            auto [ptr, ec] = std::from_chars(loc.data(), loc.data() + loc.size(), location);
            if (ec != std::errc() || ptr != loc.data() + loc.size()) {
                ++warnings_;
                continue;
            }
            s.location = location;
            s.label = std::move(fields[2]);
            s.abbreviation = std::move(fields[3]);
            s.doc_id = std::move(fields[4]);
            return s;
        }
        return std::nullopt;
    }
    while (std::getline(in_, line_)) {
        ++line_no_;
        if (!line_.empty() && line_.back() == '\r') line_.pop_back();
        if (line_.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line_, nullptr, false);
        if (j.is_discarded() || !j.is_object() || !j.contains("text") || !j.contains("location") ||
            !j.contains("label") || !j.contains("abbrev") || !j.contains("doc_id") ||
            !j["text"].is_string() || !j["location"].is_number_unsigned() ||
            !j["label"].is_string() || !j["abbrev"].is_string() || !j["doc_id"].is_string()) {
            ++warnings_;
            continue;
        }
        AbbrevSample s;
        s.text = j["text"].get<std::string>();
        s.location = j["location"].get<uint64_t>();
        s.label = j["label"].get<std::string>();
        s.abbreviation = j["abbrev"].get<std::string>();
        s.doc_id = j["doc_id"].get<std::string>();
        return s;
    }
    return std::nullopt;
}

std::vector<AbbrevSample> read_samples_file(const std::string& path, SampleFormat format) {
    SampleReader reader(path, format);
    std::vector<AbbrevSample> out;
    while (auto s = reader.next()) out.push_back(std::move(*s));
    return out;
}

uint64_t write_samples_file(const std::vector<AbbrevSample>& samples, const std::string& path,
                            SampleFormat format) {
    SampleWriter writer(path, format);
    for (const auto& s : samples) writer.write(s);
    writer.close();
    return writer.count();
}

// --- NoteRecordReader -----------------------------------------------------

NoteRecordReader::NoteRecordReader(const std::string& path)
    : in_(path, std::ios::binary), path_(path) {
    if (!in_) throw DataError("cannot open notes file: " + path);
}

std::optional<NoteRecord> NoteRecordReader::next() {
    while (std::getline(in_, line_)) {
        ++line_no_;
        if (!line_.empty() && line_.back() == '\r') line_.pop_back();
        if (line_.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line_, nullptr, false);
        if (j.is_discarded() || !j.is_object() || !j.contains("patient_id") ||
            !j.contains("admission_id") || !j.contains("chart_time") ||
            !j.contains("discharge_time") || !j.contains("died") || !j.contains("text") ||
            !j["patient_id"].is_string() || !j["admission_id"].is_string() ||
            !j["chart_time"].is_number_integer() || !j["discharge_time"].is_number_integer() ||
            !j["died"].is_boolean() || !j["text"].is_string()) {
            ++warnings_;
            continue;
        }
        NoteRecord rec;
        rec.patient_id = j["patient_id"].get<std::string>();
        rec.admission_id = j["admission_id"].get<std::string>();
        rec.chart_time = j["chart_time"].get<int64_t>();
        rec.discharge_time = j["discharge_time"].get<int64_t>();
        rec.died = j["died"].get<bool>();
        rec.text = j["text"].get<std::string>();
        if (j.contains("category") && j["category"].is_string()) {
            rec.category = note_category_from(j["category"].get<std::string>());
        }
        if (j.contains("icd_codes") && j["icd_codes"].is_array()) {
            for (const auto& code : j["icd_codes"]) {
                if (code.is_string()) rec.icd_codes.push_back(code.get<std::string>());
            }
        }
        return rec;
    }
    return std::nullopt;
}

std::vector<NoteRecord> read_note_records(const std::string& path, uint64_t* warnings) {
    NoteRecordReader reader(path);
    std::vector<NoteRecord> out;
    while (auto rec = reader.next()) out.push_back(std::move(*rec));
    if (warnings) *warnings = reader.warning_count();
    return out;
}

void write_note_record_jsonl(std::string& out, const NoteRecord& rec, bool label) {
    out += "{\"patient_id\":\"";
    json_escape_append(out, rec.patient_id);
    out += "\",\"admission_id\":\"";
    json_escape_append(out, rec.admission_id);
    out += "\",\"category\":\"";
    out += note_category_name(rec.category);
    out += "\",\"chart_time\":";
    append_i64(out, rec.chart_time);
    out += ",\"discharge_time\":";
    append_i64(out, rec.discharge_time);
    out += ",\"label\":";
    out += label ? "true" : "false";
    out += ",\"text\":\"";
    json_escape_append(out, rec.text);
    out += "\"}\n";
}

}  // namespace medalforge
