// Copyright 2026 The sedkit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sedkit/events.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "sedkit/error.hpp"

namespace sedkit {

const char* to_string(SourceTag tag) {
  switch (tag) {
    case SourceTag::kStrong: return "strong";
    case SourceTag::kWeak: return "weak";
    case SourceTag::kUnlabeled: return "unlabeled";
  }
  return "?";
}

Mat rasterize_events(const EventList& events, int frames, int n_classes, double clip_duration) {
  Mat target(frames, n_classes, 0);
  const double frame_dur = clip_duration / frames;
  for (const Event& e : events) {
    if (e.class_id < 0 || e.class_id >= n_classes)
      throw DataError("event class id out of range: " + std::to_string(e.class_id));
    for (int k = 0; k < frames; ++k) {
      double center = (k + 0.5) * frame_dur;
      if (center >= e.onset && center < e.offset) target(k, e.class_id) = 1;
    }
  }
  return target;
}

std::vector<int> weak_projection(const EventList& events) {
  EventList sorted = events;
  std::stable_sort(sorted.begin(), sorted.end(), [](const Event& a, const Event& b) { return a.onset < b.onset; });
  std::vector<int> classes;
  for (const Event& e : sorted)
    if (std::find(classes.begin(), classes.end(), e.class_id) == classes.end()) classes.push_back(e.class_id);
  return classes;
}

namespace {

int class_index(const std::vector<std::string>& names, const std::string& label, const std::string& where) {
  auto it = std::find(names.begin(), names.end(), label);
  if (it == names.end()) throw DataError("unknown event label '" + label + "' in " + where);
  return static_cast<int>(it - names.begin());
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

std::string fmt3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

}  // namespace

void write_strong_tsv(const std::string& path, const std::vector<std::pair<std::string, EventList>>& rows,
                      const std::vector<std::string>& class_names) {
  std::ofstream f(path);
  if (!f) throw IoError("cannot open for writing: " + path);
  for (const auto& [name, events] : rows) {
    EventList sorted = events;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const Event& a, const Event& b) { return a.onset < b.onset; });
    for (const Event& e : sorted)
      f << name << '\t' << fmt3(e.onset) << '\t' << fmt3(e.offset) << '\t' << class_names.at(e.class_id) << '\n';
  }
  if (!f) throw IoError("short write: " + path);
}

EventMap read_strong_tsv(const std::string& path, const std::vector<std::string>& class_names) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open: " + path);
  EventMap out;
  std::string line;
  int lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto parts = split(line, '\t');
    if (parts.size() != 4)
      throw DataError(path + ":" + std::to_string(lineno) + ": expected 4 tab-separated fields");
    Event e;
    e.onset = std::stod(parts[1]);
    e.offset = std::stod(parts[2]);
    e.class_id = class_index(class_names, parts[3], path);
    if (!(e.onset < e.offset) || e.onset < 0)
      throw DataError(path + ":" + std::to_string(lineno) + ": bad interval");
    out[parts[0]].push_back(e);
  }
  return out;
}

void write_weak_tsv(const std::string& path, const std::vector<std::pair<std::string, std::vector<int>>>& rows,
                    const std::vector<std::string>& class_names) {
  std::ofstream f(path);
  if (!f) throw IoError("cannot open for writing: " + path);
  for (const auto& [name, classes] : rows) {
    f << name << '\t';
    for (size_t i = 0; i < classes.size(); ++i) {
      if (i) f << ',';
      f << class_names.at(classes[i]);
    }
    f << '\n';
  }
  if (!f) throw IoError("short write: " + path);
}

std::map<std::string, std::set<int>> read_weak_tsv(const std::string& path,
                                                   const std::vector<std::string>& class_names) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open: " + path);
  std::map<std::string, std::set<int>> out;
  std::string line;
  int lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto parts = split(line, '\t');
    if (parts.size() != 2)
      throw DataError(path + ":" + std::to_string(lineno) + ": expected 2 tab-separated fields");
    std::set<int>& classes = out[parts[0]];
    if (!parts[1].empty())
      for (const std::string& label : split(parts[1], ','))
        classes.insert(class_index(class_names, label, path));
  }
  return out;
}

void write_name_list(const std::string& path, const std::vector<std::string>& names) {
  std::ofstream f(path);
  if (!f) throw IoError("cannot open for writing: " + path);
  for (const std::string& n : names) f << n << '\n';
  if (!f) throw IoError("short write: " + path);
}

std::vector<std::string> read_name_list(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open: " + path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(f, line))
    if (!line.empty()) out.push_back(line);
  return out;
}

}  // namespace sedkit
