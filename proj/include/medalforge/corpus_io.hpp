#pragma once

#include <cstdint>
#include <fstream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace medalforge {

struct Document {
    std::string id;
    uint64_t ordinal = 0;  // 0-based position in the input stream
    std::string text;
};

// One labeled training sample produced by reverse substitution.
// text holds the full rewritten document; token number `location` of that
// text is `abbreviation`, and `label` is the expansion it replaced.
struct AbbrevSample {
    std::string doc_id;
    std::string text;
    uint64_t location = 0;
    std::string label;
    std::string abbreviation;

    bool operator==(const AbbrevSample& o) const = default;
};

enum class NoteCategory { physician, nursing, other };

struct NoteRecord {
    std::string patient_id;
    std::string admission_id;
    NoteCategory category = NoteCategory::other;
    int64_t chart_time = 0;      // epoch seconds
    int64_t discharge_time = 0;  // epoch seconds
    bool died = false;
    std::vector<std::string> icd_codes;
    std::string text;
};

const char* note_category_name(NoteCategory c);
NoteCategory note_category_from(std::string_view name);

enum class CorpusFormat { jsonl, plain };
enum class SampleFormat { jsonl, csv };

CorpusFormat corpus_format_from(std::string_view name);   // throws invalid_argument
SampleFormat sample_format_from(std::string_view name);   // throws invalid_argument
SampleFormat sample_format_for_path(const std::string& path);  // by extension, default csv

// Streams documents out of a jsonl ({"id":..., "text":...}) or plain
// (one document per line, ids "line-<n>") file. Malformed jsonl records are
// skipped and counted; ordinals number the yielded documents from 0.
class DocumentReader {
public:
    DocumentReader(const std::string& path, CorpusFormat format);
    std::optional<Document> next();
    uint64_t warning_count() const { return warnings_; }

private:
    std::ifstream in_;
    std::string path_;
    CorpusFormat format_;
    uint64_t next_ordinal_ = 0;
    uint64_t line_no_ = 0;
    uint64_t warnings_ = 0;
    std::string line_;
};

// Sink for AbbrevSample streams.
// csv: header TEXT,LOCATION,LABEL,ABBREV,DOC_ID with RFC 4180 quoting.
// jsonl: {"text":...,"location":N,"label":...,"abbrev":...,"doc_id":...}.
class SampleWriter {
public:
    SampleWriter(const std::string& path, SampleFormat format);
    ~SampleWriter();
    void write(const AbbrevSample& sample);
    uint64_t count() const { return count_; }
    // Flushes and verifies the stream; throws DataError (mentioning the
    // partial file) on failure. Safe to call twice.
    void close();

private:
    void flush_buffer();

    std::ofstream out_;
    std::string path_;
    SampleFormat format_;
    std::string buf_;
    uint64_t count_ = 0;
    bool closed_ = false;
};

class SampleReader {
public:
    SampleReader(const std::string& path, SampleFormat format);
    std::optional<AbbrevSample> next();
    uint64_t warning_count() const { return warnings_; }

private:
    bool next_csv_record(std::vector<std::string>& fields);

    std::ifstream in_;
    std::string path_;
    SampleFormat format_;
    bool header_done_ = false;
    uint64_t line_no_ = 0;
    uint64_t warnings_ = 0;
    std::string line_;
};

std::vector<AbbrevSample> read_samples_file(const std::string& path, SampleFormat format);
uint64_t write_samples_file(const std::vector<AbbrevSample>& samples, const std::string& path,
                            SampleFormat format);

// jsonl NoteRecord stream. Records missing a required field are skipped
// with a counted warning; unknown categories map to NoteCategory::other.
class NoteRecordReader {
public:
    explicit NoteRecordReader(const std::string& path);
    std::optional<NoteRecord> next();
    uint64_t warning_count() const { return warnings_; }

private:
    std::ifstream in_;
    std::string path_;
    uint64_t line_no_ = 0;
    uint64_t warnings_ = 0;
    std::string line_;
};

std::vector<NoteRecord> read_note_records(const std::string& path, uint64_t* warnings = nullptr);
void write_note_record_jsonl(std::string& out, const NoteRecord& rec, bool label);

// Minimal JSON string escaping (RFC 8259): quote, backslash, control bytes.
void json_escape_append(std::string& out, std::string_view s);

}  // namespace medalforge
