package c6;

public class RssFeed implements Feed {
    public void open() {
    }

    public void close() {
    }
}
