package snd;

public class Mixer {
    public void play(String f) {
    }
}
