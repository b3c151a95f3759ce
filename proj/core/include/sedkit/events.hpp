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

#ifndef SEDKIT_EVENTS_HPP_
#define SEDKIT_EVENTS_HPP_

#include <map>
#include <set>
#include <string>
#include <vector>

#include "sedkit/mat.hpp"

namespace sedkit {

// Which split a training item came from.
enum class SourceTag : int { kStrong = 0, kWeak = 1, kUnlabeled = 2 };

const char* to_string(SourceTag tag);

// One annotated sound event.
struct Event {
  int class_id = 0;
  double onset = 0.0;   // seconds
  double offset = 0.0;  // seconds
};

using EventList = std::vector<Event>;

// Frame-level target map (K frames x C classes) with its provenance.
struct TargetMap {
  Mat values;  // entries in [0, 1]; binary for strong and pseudo targets
  SourceTag source = SourceTag::kStrong;
};

// Events of one clip rasterized onto the K-frame grid: a frame is active when
// its center falls inside the event interval.
Mat rasterize_events(const EventList& events, int frames, int n_classes, double clip_duration);

// Distinct class ids in onset order (weak labels are the timestamp-erased
// projection of strong labels).
std::vector<int> weak_projection(const EventList& events);

// Per-clip event annotations keyed by clip id.
using EventMap = std::map<std::string, EventList>;

// Strong-label TSV: filename<TAB>onset<TAB>offset<TAB>event_label, seconds
// with 3 decimal places.
void write_strong_tsv(const std::string& path, const std::vector<std::pair<std::string, EventList>>& rows,
                      const std::vector<std::string>& class_names);
EventMap read_strong_tsv(const std::string& path, const std::vector<std::string>& class_names);

// Weak TSV: filename<TAB>label1,label2
void write_weak_tsv(const std::string& path, const std::vector<std::pair<std::string, std::vector<int>>>& rows,
                    const std::vector<std::string>& class_names);
std::map<std::string, std::set<int>> read_weak_tsv(const std::string& path,
                                                   const std::vector<std::string>& class_names);

// Unlabeled list: one filename per line.
void write_name_list(const std::string& path, const std::vector<std::string>& names);
std::vector<std::string> read_name_list(const std::string& path);

}  // namespace sedkit

#endif  // SEDKIT_EVENTS_HPP_
