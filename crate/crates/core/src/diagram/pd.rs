use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::sliced::Sign;
use crate::error::{parse_err, Result, SkeinError};

/// One crossing `X±[a,b,c,d]`: arc ids counterclockwise from the incoming under-arc.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PdCrossing {
    pub sign: Sign,
    pub slots: [usize; 4],
}

impl PdCrossing {
    pub fn under_in(&self) -> usize {
        self.slots[0]
    }

    pub fn under_out(&self) -> usize {
        self.slots[2]
    }

    pub fn over_in(&self) -> usize {
        match self.sign {
            Sign::Pos => self.slots[3],
            Sign::Neg => self.slots[1],
        }
    }

    pub fn over_out(&self) -> usize {
        match self.sign {
            Sign::Pos => self.slots[1],
            Sign::Neg => self.slots[3],
        }
    }
}

/// A closed oriented link diagram: crossings joined by arcs, plus crossingless circles.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PdDiagram {
    pub crossings: Vec<PdCrossing>,
    pub loops: usize,
}

impl PdDiagram {
    /// Every arc must leave exactly one slot and enter exactly one slot.
    pub fn validate(&self) -> Result<()> {
        let mut ins: BTreeMap<usize, usize> = BTreeMap::new();
        let mut outs: BTreeMap<usize, usize> = BTreeMap::new();
        for x in &self.crossings {
            *ins.entry(x.under_in()).or_default() += 1;
            *ins.entry(x.over_in()).or_default() += 1;
            *outs.entry(x.under_out()).or_default() += 1;
            *outs.entry(x.over_out()).or_default() += 1;
        }
        for (arc, n) in &ins {
            if *n != 1 {
                return Err(SkeinError::InvalidDiagram(format!("arc {arc} enters {n} crossings")));
            }
            if outs.get(arc) != Some(&1) {
                return Err(SkeinError::InvalidDiagram(format!("arc {arc} is dangling or misoriented")));
            }
        }
        if let Some(arc) = outs.keys().find(|a| !ins.contains_key(a)) {
            return Err(SkeinError::InvalidDiagram(format!("arc {arc} is dangling or misoriented")));
        }
        Ok(())
    }

    /// Disjoint union, renumbering the arcs of `other`.
    pub fn disjoint_union(&self, other: &PdDiagram) -> PdDiagram {
        let shift = self.crossings.iter().flat_map(|x| x.slots).max().unwrap_or(0);
        let mut crossings = self.crossings.clone();
        crossings.extend(other.crossings.iter().map(|x| PdCrossing { sign: x.sign, slots: x.slots.map(|a| a + shift) }));
        PdDiagram { crossings, loops: self.loops + other.loops }
    }
}

impl fmt::Display for PdDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for x in &self.crossings {
            let s = if x.sign == Sign::Pos { '+' } else { '-' };
            let [a, b, c, d] = x.slots;
            writeln!(f, "X{s}[{a},{b},{c},{d}]")?;
        }
        writeln!(f, "loops: {}", self.loops)
    }
}

impl FromStr for PdDiagram {
    type Err = SkeinError;

    fn from_str(s: &str) -> Result<Self> {
        let mut pd = PdDiagram::default();
        for (idx, raw) in s.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("loops:") {
                pd.loops = rest.trim().parse().map_err(|_| parse_err(line_no, format!("bad loop count `{}`", rest.trim())))?;
                continue;
            }
            let sign = match line.get(..2) {
                Some("X+") => Sign::Pos,
                Some("X-") => Sign::Neg,
                _ => return Err(parse_err(line_no, format!("expected `X+[..]`, `X-[..]` or `loops:`, got `{line}`"))),
            };
            let inner = line[2..]
                .trim()
                .strip_prefix('[')
                .and_then(|r| r.strip_suffix(']'))
                .ok_or_else(|| parse_err(line_no, "expected bracketed arc list"))?;
            let arcs: Vec<usize> = inner
                .split(',')
                .map(|a| a.trim().parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| parse_err(line_no, format!("bad arc ids `{inner}`")))?;
            let slots: [usize; 4] = arcs.try_into().map_err(|_| parse_err(line_no, "a crossing has exactly four arcs"))?;
            pd.crossings.push(PdCrossing { sign, slots });
        }
        pd.validate().map_err(|e| parse_err(s.lines().count().max(1), e.to_string()))?;
        Ok(pd)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_kink() {
        let pd: PdDiagram = "X+[1,1,2,2]\nloops: 0\n".parse().unwrap();
        assert_eq!(pd.crossings.len(), 1);
        assert_eq!(pd.to_string(), "X+[1,1,2,2]\nloops: 0\n");
    }

    #[test]
    fn rejects_dangling_arc() {
        assert!("X+[1,2,3,4]\n".parse::<PdDiagram>().is_err());
        assert!("Y[1,2,3,4]\n".parse::<PdDiagram>().is_err());
        let e = "loops: 1\nX+[1,2]\n".parse::<PdDiagram>().unwrap_err();
        assert!(matches!(e, SkeinError::Parse { line: 2, .. }));
    }
}
