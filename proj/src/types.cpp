#include "fishfinder/types.hpp"

namespace fishfinder {

const char* to_string(Section s) {
  switch (s) {
    case Section::InitialVisual: return "InitialVisual";
    case Section::InitialAuditory: return "InitialAuditory";
    case Section::Practice: return "Practice";
    case Section::Main: return "Main";
    case Section::FinalVisual: return "FinalVisual";
    case Section::FinalAuditory: return "FinalAuditory";
  }
  return "?";
}

const char* to_string(Modality m) {
  return m == Modality::Visual ? "Visual" : "Auditory";
}

const char* to_string(StimulusKind k) {
  return k == StimulusKind::Target ? "Target" : "NonTarget";
}

const char* to_string(Label l) { return l == Label::ADHD ? "ADHD" : "Control"; }

std::optional<Section> section_from_string(const std::string& s) {
  if (s == "InitialVisual") return Section::InitialVisual;
  if (s == "InitialAuditory") return Section::InitialAuditory;
  if (s == "Practice") return Section::Practice;
  if (s == "Main") return Section::Main;
  if (s == "FinalVisual") return Section::FinalVisual;
  if (s == "FinalAuditory") return Section::FinalAuditory;
  return std::nullopt;
}

std::optional<Modality> modality_from_string(const std::string& s) {
  if (s == "Visual") return Modality::Visual;
  if (s == "Auditory") return Modality::Auditory;
  return std::nullopt;
}

std::optional<StimulusKind> kind_from_string(const std::string& s) {
  if (s == "Target") return StimulusKind::Target;
  if (s == "NonTarget") return StimulusKind::NonTarget;
  return std::nullopt;
}

std::optional<Label> label_from_string(const std::string& s) {
  if (s == "ADHD") return Label::ADHD;
  if (s == "Control") return Label::Control;
  return std::nullopt;
}

std::vector<double> ImuStream::channel(ImuChannel c) const {
  std::vector<double> out;
  out.reserve(samples.size());
  for (const ImuSample& s : samples) {
    switch (c) {
      case ImuChannel::Ax: out.push_back(s.ax); break;
      case ImuChannel::Ay: out.push_back(s.ay); break;
      case ImuChannel::Az: out.push_back(s.az); break;
      case ImuChannel::Gx: out.push_back(s.gx); break;
      case ImuChannel::Gy: out.push_back(s.gy); break;
      case ImuChannel::Gz: out.push_back(s.gz); break;
      case ImuChannel::AccelAmp:
        out.push_back(std::sqrt(s.ax * s.ax + s.ay * s.ay + s.az * s.az));
        break;
      case ImuChannel::GyroAmp:
        out.push_back(std::sqrt(s.gx * s.gx + s.gy * s.gy + s.gz * s.gz));
        break;
    }
  }
  return out;
}

}  // namespace fishfinder
