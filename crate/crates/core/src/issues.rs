//! The in-sync relation and the issues (its equivalence classes) under complete semantics.

use serde::Serialize;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::framework::{ArgumentationFramework, Labeling};

/// Whether `a` and `b` carry the same label in every complete labeling, or
/// mirrored `in`/`out` labels in every complete labeling.
pub fn in_sync(af: &ArgumentationFramework, a: &str, b: &str) -> Result<bool> {
    let a = af.require(a)?;
    let b = af.require(b)?;
    let complete = af.complete_labelings()?;
    Ok(sync_sign(&complete, a, b).is_some())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

/// `Some(Plus)` for same-label sync, `Some(Minus)` for mirrored sync.
/// Same-label sync wins when both hold (both arguments always `undec`).
fn sync_sign(complete: &[Labeling], a: usize, b: usize) -> Option<Sign> {
    if complete.iter().all(|l| l.get(a) == l.get(b)) {
        Some(Sign::Plus)
    } else if complete.iter().all(|l| l.get(a) == l.get(b).mirror()) {
        Some(Sign::Minus)
    } else {
        None
    }
}

/// One issue: its members, and the members that mirror the representative.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Block {
    pub members: BitSet,
    pub negative: BitSet,
}

impl Block {
    /// The least member with sign `+`.
    pub fn representative(&self) -> usize {
        self.members.difference(self.negative).iter().next().expect("block has a positive member")
    }

    pub fn sign(&self, arg: usize) -> Option<Sign> {
        match (self.members.contains(arg), self.negative.contains(arg)) {
            (false, _) => None,
            (true, false) => Some(Sign::Plus),
            (true, true) => Some(Sign::Minus),
        }
    }
}

/// A partition of a framework's arguments into issues, ordered by least member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IssuePartition {
    len: usize,
    blocks: Vec<Block>,
    block_of: Vec<usize>,
}

impl IssuePartition {
    /// Computes the issues of `af` from its complete labelings.
    pub fn compute(af: &ArgumentationFramework) -> Result<IssuePartition> {
        let complete = af.complete_labelings()?;
        Ok(IssuePartition::from_complete(af.len(), &complete))
    }

    /// Issues induced by a precomputed list of complete labelings over `len` arguments.
    pub fn from_complete(len: usize, complete: &[Labeling]) -> IssuePartition {
        let mut blocks: Vec<Block> = Vec::new();
        let mut block_of = Vec::with_capacity(len);
        'args: for a in 0..len {
            for (i, block) in blocks.iter_mut().enumerate() {
                if let Some(sign) = sync_sign(complete, block.representative(), a) {
                    block.members.insert(a);
                    if sign == Sign::Minus {
                        block.negative.insert(a);
                    }
                    block_of.push(i);
                    continue 'args;
                }
            }
            block_of.push(blocks.len());
            blocks.push(Block { members: BitSet::singleton(a), negative: BitSet::EMPTY });
        }
        IssuePartition { len, blocks, block_of }
    }

    /// A partition given directly as member sets; every member gets sign `+`.
    pub fn from_blocks(len: usize, members: impl IntoIterator<Item = BitSet>) -> Result<IssuePartition> {
        let mut blocks: Vec<Block> = members.into_iter().map(|m| Block { members: m, negative: BitSet::EMPTY }).collect();
        let mut seen = BitSet::EMPTY;
        for b in &blocks {
            if b.members.is_empty() {
                return Err(Error::Domain("issue blocks must be non-empty".into()));
            }
            if !seen.is_disjoint(b.members) {
                return Err(Error::Domain("issue blocks overlap".into()));
            }
            seen = seen.union(b.members);
        }
        if seen != BitSet::full(len) {
            return Err(Error::Domain(format!("issue blocks do not cover exactly {len} arguments")));
        }
        blocks.sort_by_key(|b| b.members.iter().next());
        let mut block_of = vec![0; len];
        for (i, b) in blocks.iter().enumerate() {
            for a in b.members {
                block_of[a] = i;
            }
        }
        Ok(IssuePartition { len, blocks, block_of })
    }

    /// A partition given by argument names, e.g. `[["A", "B"], ["C"]]`.
    pub fn from_named_blocks<'a, B>(af: &ArgumentationFramework, blocks: impl IntoIterator<Item = B>) -> Result<IssuePartition>
    where
        B: IntoIterator<Item = &'a str>,
    {
        let members = blocks
            .into_iter()
            .map(|b| b.into_iter().map(|n| af.require(n)).collect::<Result<BitSet>>())
            .collect::<Result<Vec<_>>>()?;
        IssuePartition::from_blocks(af.len(), members)
    }

    /// Number of arguments covered.
    pub fn domain_len(&self) -> usize {
        self.len
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn block_of(&self, arg: usize) -> usize {
        self.block_of[arg]
    }

    /// The blocks containing at least one argument of `args`.
    pub fn touched(&self, args: BitSet) -> BitSet {
        args.iter().map(|a| self.block_of[a]).collect()
    }

    pub(crate) fn check_domain(&self, l: &Labeling) -> Result<()> {
        if l.len() == self.len {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "issue partition covers {} arguments but the labeling has {}",
                self.len,
                l.len()
            )))
        }
    }

    /// Whether every block is uniformly decided or uniformly `undec` in `l`,
    /// with `-` members mirroring `+` members.
    pub fn is_uniform_on(&self, l: &Labeling) -> bool {
        self.blocks.iter().all(|b| {
            let rep = l.get(b.representative());
            b.members.iter().all(|a| {
                let label = l.get(a);
                if b.negative.contains(a) {
                    label == rep.mirror()
                } else {
                    label == rep
                }
            })
        })
    }

    /// Named view for serialization.
    pub fn describe(&self, af: &ArgumentationFramework) -> Vec<IssueView> {
        self.blocks
            .iter()
            .map(|b| IssueView {
                representative: af.name(b.representative()).to_string(),
                members: b
                    .members
                    .iter()
                    .map(|a| MemberView { argument: af.name(a).to_string(), sign: b.sign(a).expect("member") })
                    .collect(),
            })
            .collect()
    }

    /// Block member names, for rendering issue sets.
    pub fn block_names(&self, af: &ArgumentationFramework, block: usize) -> Vec<String> {
        self.blocks[block].members.iter().map(|a| af.name(a).to_string()).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IssueView {
    pub representative: String,
    pub members: Vec<MemberView>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MemberView {
    pub argument: String,
    pub sign: Sign,
}
