package snd;

public class Mixer {
    public void start(String f) {
    }
}
