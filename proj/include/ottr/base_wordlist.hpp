#pragma once

#include <string_view>

// Bundled starter dictionary for the spell check: one lowercase word per
// line. Deliberately compact; course-specific vocabulary belongs in the
// project wordlist file named by the manifest.

namespace ottr {

inline constexpr std::string_view kBaseWordlist = R"dict(
a
able
about
above
absent
academic
accept
accepted
accepting
accepts
access
accessibility
accessible
accordingly
account
across
action
active
activity
actual
actually
adaptable
add
added
adding
addition
additional
address
adds
admin
adult
adults
advanced
advice
after
afternoon
afterward
afterwards
again
against
age
agree
agreed
agreeing
agreement
agrees
ahead
air
algorithm
algorithms
all
allow
allowed
allowing
allows
almost
alone
along
already
also
alternative
although
altogether
always
am
amazing
amet
among
amount
an
analysis
anchor
anchors
ancient
and
angry
animal
animals
annual
answer
answered
answering
answers
ant
ants
any
anybody
anyhow
anyone
anything
anyway
anywhere
apart
api
apis
app
apparently
appear
appeared
appearing
appears
apple
apples
application
applied
applies
apply
applying
approach
appropriate
approximately
apps
april
archive
are
area
aren't
argument
arm
arms
around
array
arrays
article
artifact
as
aside
ask
asked
asking
asks
assessment
assessments
assume
assumed
assumes
assuming
at
attribute
attributes
audience
audio
august
aunt
author
authors
autograded
automatic
automatically
automation
autumn
available
average
aware
away
b
babies
baby
back
backend
background
backup
backward
backwards
bad
balance
banana
bananas
bandwidth
bank
barely
base
basic
basically
basics
basis
be
beach
bear
bears
beautiful
became
because
become
becomes
becoming
bed
bedroom
bee
been
bees
before
beforehand
began
begin
beginner
beginners
beginning
begins
begun
behavior
behind
being
believe
believed
believes
believing
below
beneath
benefit
beside
besides
best
better
between
beyond
big
binary
bird
birds
bit
bits
black
blank
block
blocks
blog
blue
board
body
book
books
boolean
bot
both
bottom
bought
box
boy
boys
branch
branches
brave
bread
break
breakfast
breaking
breaks
bridge
brief
briefly
bright
bring
bringing
brings
broad
broke
broken
brother
brought
brown
browser
budget
bug
bugs
build
building
buildings
builds
built
bundle
bundles
bus
business
busy
but
butter
button
buttons
buy
buying
buys
by
c
cache
cake
call
called
calling
calls
calm
came
can
can't
capable
capital
car
card
care
careful
carefully
carried
carries
carry
carrying
cars
case
cases
cat
catch
catches
catching
category
cats
caught
cause
caused
causes
causing
ceiling
cell
cells
central
certain
certainly
certificate
certificates
certification
chair
chairs
chance
change
changed
changes
changing
chapter
chapters
chart
charts
cheap
check
checkbox
checked
checking
checklist
checkout
checks
cheese
chicken
child
children
choice
choices
choose
chooses
choosing
chose
chosen
city
civil
class
classes
classic
clean
clear
clearly
clever
cli
click
clicked
clicking
clicks
clock
clone
close
closed
closes
closing
cloud
cloudy
cluster
coat
code
coffee
cold
collaborative
collect
collected
collecting
collection
collects
college
color
colors
column
columns
come
comes
comfortable
coming
command
commands
comment
comments
common
community
companies
company
compare
compared
compares
comparing
comparison
compiler
complete
completed
completes
completing
complex
component
components
compression
compute
computed
computer
computers
computes
computing
concept
concepts
concerning
conclusion
condition
conditions
conference
configurable
configuration
configure
configured
configures
configuring
confirm
confirmed
confirming
confirms
connection
consequently
consider
consideration
considered
considering
considers
consistent
contain
contained
container
containers
containing
contains
content
contents
context
continue
continued
continues
continuing
contract
contributor
contributors
control
convert
converted
converting
converts
cookie
cool
copied
copies
copy
copying
corner
corpus
correct
corrected
correcting
correctly
corrects
could
couldn't
count
counted
counting
countries
country
counts
course
courses
coursework
cousin
cousins
cover
covered
covering
covers
cow
cows
crazy
create
created
creates
creating
credit
credits
critical
css
csv
cultural
culture
cup
cups
current
currently
curricula
curriculum
custom
customer
customers
cut
cuts
cutting
cycle
d
dangerous
dare
dark
dashboard
data
database
dataset
datasets
date
daughter
day
days
dead
deal
debug
debugging
december
decide
decided
decides
deciding
decision
deck
decks
deep
deer
default
defaults
define
defined
defines
defining
definitely
definition
degree
delete
deleted
deletes
deleting
dependencies
dependency
dependent
deploy
deployment
describe
described
describes
describing
description
design
designed
designing
designs
desktop
despite
detail
details
dev
develop
developed
developer
developers
developing
development
develops
device
devices
dialog
dictionary
did
didn't
diff
differ
differed
difference
differences
different
differing
differs
difficult
diffs
digital
dinner
direct
direction
directly
directories
directory
dirty
discussion
dish
dishes
disk
display
displayed
displaying
displays
distinct
distribution
do
document
documentation
documents
does
doesn't
dog
dogs
doing
dollar
dolor
domain
don't
done
door
doors
double
down
download
downloaded
downloading
downloads
downward
downwards
draft
draw
drawing
drawn
draws
dress
drew
drive
drop
dropped
dropping
drops
dry
duck
ducks
due
duration
during
e
each
ear
early
ears
easily
east
easy
economic
economy
edge
edit
edited
editing
editor
edits
education
educational
educator
educators
effect
effective
efficient
effort
eg
egg
eggs
eight
eighth
either
element
elements
elephant
eleven
else
email
embed
embedded
embedding
embeds
empty
enable
enabled
enables
enabling
encoding
encryption
end
ended
ending
endpoint
endpoints
ends
engine
enough
enter
entered
entering
enters
entire
entry
enum
environment
environmental
equal
error
errors
especially
essential
essentially
etc
even
evening
event
events
eventually
ever
every
everybody
everyone
everything
everywhere
evidence
exact
exactly
example
examples
excellent
exciting
execute
executed
executes
executing
exercise
exercises
exist
existed
existing
exists
exit
expect
expected
expecting
expects
expensive
experience
expert
experts
explain
explained
explaining
explains
explore
explored
explores
exploring
export
exports
extension
extensions
external
extra
eye
eyes
f
face
facilitator
fact
factor
facts
fail
failed
failing
fails
failure
failures
fair
fall
fallen
falling
falls
false
familiar
family
famous
far
farm
fast
father
favicon
feature
features
february
federal
feedback
feel
feeling
feels
feet
fell
felt
fetch
fetched
fetches
fetching
few
field
fields
fifth
fifty
figure
figures
file
filename
filenames
files
filesystem
fill
filled
filling
fills
final
finally
financial
find
finding
findings
finds
fine
finger
fingers
finish
finished
finishes
finishing
firewall
firm
first
fish
fit
fits
fitted
fitting
five
fix
fixed
fixes
fixing
flag
flags
flat
flexible
floor
foggy
folder
folders
follow
followed
following
follows
followup
font
fonts
food
foot
footer
for
force
foreign
forest
form
formal
format
formative
formats
formatting
formed
former
forming
forms
forty
forum
forward
found
foundation
four
fourth
fox
foxes
frame
framework
frameworks
free
frequent
fresh
friday
friend
friendly
friends
frog
frogs
from
front
frontend
fruit
fruits
full
fully
fun
function
functions
fundamental
funny
furthermore
future
g
gain
gained
gaining
gains
game
games
gap
garden
gate
gave
general
generally
generate
generated
generates
generating
get
gets
getting
gigabyte
girl
girls
git
give
given
gives
giving
glad
glass
glasses
global
glossary
go
goal
goals
goes
going
gold
golden
gone
good
goodbye
got
gotten
grade
graded
grader
grades
grading
grammar
grandfather
grandmother
graph
graphs
gray
great
green
grew
grey
ground
group
groups
grow
growing
grown
grows
guide
guides
h
had
hadn't
hair
half
halfway
hand
handbook
handle
handled
handler
handles
handling
hands
happen
happened
happening
happens
happy
hard
hardly
has
hash
hashes
hasn't
hat
have
haven't
having
he
he's
head
header
headers
heading
headings
health
hear
heard
hearing
hears
heart
heavy
height
held
hello
help
helped
helpful
helping
helps
hence
her
here
here's
hers
herself
hi
hid
hidden
hide
hides
hiding
high
hill
hills
him
himself
his
history
hold
holding
holds
home
homepage
hope
hoped
hopes
hoping
horse
horses
host
hosted
hosting
hostname
hosts
hot
hotel
hour
hours
house
how
however
html
huge
human
hundred
hungry
husband
i
i'm
i've
icon
icons
id
idea
ideas
identified
identifies
identify
identifying
ids
ie
if
iframe
iframes
ignore
ignored
ignores
ignoring
image
images
immediately
impact
import
important
imports
impossible
improve
improved
improves
improving
in
inbox
include
included
includes
including
incorrect
incorrectly
indeed
independent
index
individual
industry
info
informal
informatics
information
infrastructure
initially
inline
inner
input
insert
inserted
inserting
inserts
inside
install
installed
installing
installs
instance
instantly
instead
institution
institutions
instruction
instructions
instructor
instructors
integrated
integration
interactive
interest
interested
interesting
interface
interfaces
internal
international
internet
into
intro
introduce
introduced
introduces
introducing
introduction
intros
invalid
inward
ipsum
is
island
isn't
issue
issues
it
it's
item
items
its
itself
j
jacket
january
javascript
job
jobs
joint
json
juice
july
jump
jumped
jumping
jumps
june
just
k
keep
keeping
keeps
kept
key
keyboard
keyword
keywords
kid
kids
kilobyte
kind
kinds
kitchen
knew
know
knowing
knowledge
known
knows
l
label
labels
lake
lamp
land
language
languages
laptop
large
last
late
latency
latest
laugh
laughed
laughing
laughs
launch
launched
launches
launching
law
layout
lazy
lead
leader
leading
leads
league
learn
learned
learner
learners
learning
learns
least
leave
leaves
leaving
led
left
leg
legal
legs
less
lesson
lessons
let
let's
lets
letter
letters
letting
level
levels
library
license
life
light
like
liked
likely
likes
likewise
liking
limit
limited
line
lines
link
linked
linker
linking
links
lint
linter
linting
linux
lion
lions
list
listed
listen
listened
listening
listens
listing
listings
lists
literature
little
live
lived
lives
living
load
loaded
loading
loads
local
localhost
location
lock
lockfile
log
logic
logical
login
logo
logs
long
longer
look
looked
looking
looks
lorem
lose
loses
losing
lost
lot
lots
loud
love
loved
loves
loving
low
lower
lowercase
lucky
lunch
m
machine
machines
made
mail
main
mainly
maintain
maintained
maintaining
maintains
major
make
makes
making
man
manage
managed
manages
managing
manifest
manner
manual
manually
manuscript
many
map
maps
march
margin
mark
markdown
marked
market
marking
marks
markup
match
matched
matches
matching
material
materials
matter
maximum
may
maybe
me
meal
meals
mean
meaning
means
meant
meanwhile
measure
measured
measures
measuring
meat
mechanism
mechanisms
media
medical
medium
meet
meeting
meets
megabyte
member
members
memory
men
mental
mention
mentioned
mentioning
mentions
menu
merely
merge
merged
merges
merging
message
messages
met
metadata
method
methods
mice
micro
middle
midnight
might
milk
million
mind
mine
minimal
minimum
minor
minute
minutes
miss
missed
misses
missing
mistake
mistakes
mobile
mock
model
models
modern
modular
module
modules
moment
monday
money
monkey
monkeys
month
months
more
moreover
morning
most
mostly
mother
mountain
mountains
mouse
mouth
move
moved
moves
moving
much
multimedia
multiple
must
mutual
my
myself
n
name
named
names
namespace
naming
narrow
nation
national
native
natural
nature
nav
navigation
near
nearby
nearly
necessary
neck
need
negative
neither
network
networks
never
nevertheless
new
news
next
nice
night
nine
ninth
no
nobody
none
nonetheless
noon
nor
normal
north
nose
not
note
noted
notes
nothing
notice
noticed
notices
noticing
noting
november
now
nowhere
number
numbers
numerous
o
object
objects
obtain
obtained
obtaining
obtains
obviously
occur
occurred
occurring
occurs
ocean
october
of
off
offer
offered
offering
offers
office
official
offline
often
ok
okay
old
on
once
one
oneself
online
only
onto
open
opened
opening
opens
opt
option
optional
options
or
orange
oranges
order
ordered
ordering
orders
ordinary
organize
organized
organizes
organizing
original
originally
os
other
others
otherwise
ought
our
ours
ourselves
out
outcome
outcomes
outer
outline
output
outputs
outro
outward
over
overall
overlay
overview
own
owner
p
pace
package
packages
page
pages
paid
paint
painted
painting
paints
paper
paragraph
paragraphs
parameter
parameters
parent
park
parse
parser
parsers
parsing
part
participants
particular
particularly
partly
parts
party
pass
passed
passes
passing
password
past
patch
patches
patchset
patchsets
path
paths
pattern
patterns
pay
paying
pays
pdf
pedagogical
pedagogy
people
per
percent
perfect
perform
performance
performed
performing
performs
perhaps
period
permanent
person
personal
phase
phone
photo
physical
pick
picked
picking
picks
picture
pictures
piece
pig
pigs
pink
pipeline
pixel
pixels
place
placed
placeholder
places
placing
plain
plan
planned
planning
plans
plate
plates
platform
platforms
play
played
playing
plays
please
plugin
plugins
png
pocket
point
pointed
pointing
points
policy
political
poor
popular
population
portal
position
positive
possible
possibly
power
powerful
practical
practice
practiced
practices
practicing
precheck
precise
prefix
preflight
prepare
prepared
prepares
preparing
prerequisite
prerequisites
present
presented
presenting
presents
preview
previewed
previewing
previews
previous
previously
price
primary
principle
principles
print
printed
printing
prints
prior
private
probably
problem
problems
procedure
procedures
proceed
proceeded
proceeding
proceeds
process
processor
produce
produced
produces
producing
product
production
products
professional
profile
profiles
program
programs
progress
project
projects
prompt
prompts
proper
properly
prose
protocol
proud
provide
provided
provides
providing
proxy
public
publish
published
publishes
publishing
pull
pulled
pulling
pulls
purple
purpose
push
pushed
pushes
pushing
put
puts
putting
q
quality
query
question
questions
queue
quick
quickly
quiet
quite
quiz
quizzes
r
rabbit
rabbits
rain
rained
raining
rainy
ran
range
rare
rarely
rate
rather
raw
reach
reached
reaches
reaching
read
reader
readers
reading
readme
reads
ready
real
really
realtime
reason
reasons
rebuild
rebuilding
rebuilds
rebuilt
receive
received
receives
receiving
recent
recently
recommend
recommended
recommending
recommends
record
recorded
recording
records
red
redirect
redirects
reduce
reduced
reduces
reducing
refactor
refer
reference
referenced
references
referencing
referred
referring
refers
refresh
refreshed
refreshes
refreshing
regarding
regex
region
regular
related
relative
release
relevant
reliable
remain
remainder
remained
remaining
remains
remember
remembered
remembering
remembers
remote
remove
removed
removes
removing
rename
renamed
renames
renaming
render
rendered
rendering
renders
replace
replaced
replaces
replacing
report
reported
reporting
reports
repositories
repository
reproducibility
reproducible
request
requested
requesting
requests
require
required
requires
requiring
rerender
rerendered
research
reserve
reserved
reserves
reserving
reset
resets
resetting
resolve
resolved
resolves
resolving
resource
resources
response
responsible
result
results
return
returned
returning
returns
reuse
reused
reuses
reusing
review
reviewed
reviewing
reviews
rice
rich
right
risk
river
road
robust
rock
rocks
role
roles
rollback
roof
room
root
rough
roughly
round
router
royal
rubric
rubrics
rule
rules
run
runnable
running
runs
runtime
s
sad
safe
said
salt
same
sample
sampled
samples
sampling
sand
sandbox
sang
sat
saturday
save
saved
saves
saving
saw
say
saying
says
scaffold
scaffolding
schedule
schema
scheme
school
schools
science
scientist
scientists
scope
screen
screens
screenshot
script
scripts
scroll
sdk
sea
search
searched
searches
searching
season
seasons
seat
seats
second
secondary
seconds
section
sections
secure
see
seeing
seem
seemed
seeming
seems
seen
sees
seldom
select
selected
selecting
selects
sell
selling
sells
send
sending
sends
senior
sense
sent
sentence
sentences
separate
separately
september
series
serious
serve
served
server
servers
serves
service
services
serving
session
sessions
set
sets
setting
setup
setups
seven
seventh
several
shall
shape
share
shared
shares
sharing
sharp
she
she's
sheep
shell
shirt
shoe
shoes
short
shortcut
shortly
should
shoulder
shoulders
shouldn't
show
showed
showing
shown
shows
side
sidebar
sign
signed
significant
signing
signs
signup
silly
silver
similar
simple
simply
since
sing
singing
single
sings
sister
sit
site
sitemap
sites
sits
sitting
situation
six
sixth
size
skill
skills
skip
skipped
skipping
skips
sky
sleep
sleeping
sleeps
sleepy
slept
slide
slides
slow
slowly
small
smart
smile
smiled
smiles
smiling
snake
snakes
snippet
snippets
snow
snowy
so
social
society
sock
socks
software
sold
solid
solution
some
somebody
somehow
someone
something
sometimes
somewhat
somewhere
son
sort
sorted
sorting
sorts
soup
source
sources
south
space
speak
speaker
speaking
speaks
spec
special
specific
specifically
specification
specified
specifies
specify
specifying
spell
spelled
spelling
spells
spend
spending
spends
spent
spider
spiders
split
splits
splitting
spoke
spoken
spreadsheet
spring
square
stable
stack
staff
stage
staging
stairs
stand
standalone
standard
standing
stands
star
stars
start
started
starter
starters
starting
starts
state
stated
statement
states
stating
station
status
stay
stayed
staying
stays
stderr
stdin
stdout
step
steps
still
stone
stones
stood
stop
stopped
stopping
stops
storage
store
stored
stores
storing
stormy
straight
strange
stream
street
streets
strong
structure
stub
stubs
student
students
studied
studies
study
studying
style
styles
stylesheet
subcommand
subcommands
subdirectory
subject
submenu
submit
submits
submitted
submitting
succeed
succeeded
succeeding
succeeds
success
successful
successfully
such
sufficient
sugar
suggest
suggested
suggesting
suggests
suitable
summary
summative
summer
sun
sunday
sung
sunny
support
supported
supporting
supports
suppose
supposed
supposes
supposing
sure
surely
surface
swam
swim
swimming
swims
syllabus
symbol
sync
synced
syncing
syncs
syntax
sys
system
systems
t
tab
table
tables
tag
tags
take
taken
takes
taking
talk
talked
talking
talks
tall
target
targets
task
tasks
taught
tea
teach
teacher
teachers
teaches
teaching
team
teams
technical
teeth
tell
telling
tells
template
templates
temporary
ten
tenth
term
terminal
terms
terrible
test
tested
testing
tests
text
than
thank
thanks
that
that's
the
their
theirs
them
themselves
then
there
there's
therefore
these
they
they're
they've
thick
thin
thing
things
think
thinking
thinks
third
thirsty
thirteen
thirty
this
those
though
thought
thousand
three
threw
thrice
through
throughout
throw
throwing
thrown
throws
thumbnail
thursday
thus
tiger
tigers
time
timeout
times
timestamp
timestamps
tiny
tip
tips
tired
title
titles
to
today
together
toggle
toggles
token
tokens
told
tomorrow
too
took
tool
toolbar
tooling
toolkit
tools
tooth
top
topic
topics
total
touchscreen
toward
towards
town
track
tracked
tracking
tracks
trade
tradition
traditional
traffic
train
trained
trainee
trainees
trainer
trainers
training
trains
travel
traveled
traveling
travels
tree
trees
tried
tries
trouble
trousers
true
truly
try
trying
tuesday
turn
turned
turning
turns
tutorial
tutorials
twelve
twenty
twice
two
txt
type
types
typical
typically
u
ui
ultimately
unable
uncle
under
underneath
understand
understanding
understands
understood
unexecuted
unicode
uniform
unique
unit
units
universal
unknown
unless
unlikely
until
untracked
up
update
updated
updates
updating
upkeep
upload
uploaded
uploading
uploads
upon
upper
uppercase
uptime
upward
upwards
urban
url
urls
us
usage
use
used
useful
user
username
users
uses
using
usual
usually
utf
v
valid
validate
validated
validates
validating
validation
valuable
value
values
variable
variables
variety
various
vegetable
vegetables
vendor
verification
verified
verifies
verify
verifying
version
versioning
versions
versus
very
via
video
videos
view
viewed
viewing
views
village
violet
visible
visit
visited
visiting
visits
visual
voice
vs
w
wait
waited
waiting
waits
walk
walked
walking
walks
wall
walls
want
wanted
wanting
wants
warm
was
wash
washed
washes
washing
wasn't
watch
watched
watches
watching
water
way
ways
we
we're
we've
weak
wear
wearing
wears
weather
web
website
websites
wednesday
week
weekly
weeks
welcome
welcomed
welcomes
welcoming
well
went
were
weren't
west
what
what's
whatever
wheel
when
whenever
where
whereas
wherever
whether
which
whichever
while
white
who
who's
whoever
whole
whom
whose
why
wide
width
wife
wiki
wild
wildcard
will
wind
window
windows
windy
wine
winter
wise
wish
wished
wishes
wishing
with
within
without
wolf
wolves
woman
women
won't
wonder
wondered
wonderful
wondering
wonders
wood
wooden
word
words
wore
work
worked
workflow
workflows
working
workload
works
workspace
world
worn
worse
worst
would
wouldn't
write
writer
writers
writes
writing
written
wrong
wrote
x
y
yaml
yard
year
years
yellow
yes
yesterday
yet
you
you're
you've
young
your
yours
yourself
yourselves
z
zero
zip
)dict";

}  // namespace ottr
